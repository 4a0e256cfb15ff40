from django.test import SimpleTestCase

from catalog import build_catalog
from groups import (
    PermutationGeneratorSet, abelian, build_from_perm_generators, cyclic, dicyclic, dihedral,
    direct_product, generalized_quaternion, is_isomorphic, symmetric,
)
from isolation import analyze
from lattice import all_subgroups
from lattice.tests import catalog_24

from .recognizers import (
    factorize, is_cyclic, is_generalized_quaternion, known_isolated_simple_family,
    structure_tag,
)
from .tags import StructureTag, TagKind
from .theorem import classical_facts, theorem_predicate


class StructureTagTests(SimpleTestCase):

    def test_cyclic_kinds(self):
        cases = [
            (1, StructureTag.of(TagKind.TRIVIAL)),
            (4, StructureTag.of(TagKind.CYCLIC_P_SQUARED, p=2)),
            (27, StructureTag.of(TagKind.CYCLIC_P_CUBED, p=3)),
            (15, StructureTag.of(TagKind.CYCLIC_PQ, p=3, q=5)),
            (32, StructureTag.of(TagKind.CYCLIC_PRIME_POWER, p=2, m=5)),
            (12, StructureTag.of(TagKind.CYCLIC_PM_QN, p=2, m=2, q=3, n=1)),
            (30, StructureTag.of(TagKind.CYCLIC_OTHER, n=30)),
            (7, StructureTag.of(TagKind.CYCLIC_PRIME_POWER, p=7, m=1)),
        ]
        for n, tag in cases:
            with self.subTest(n=n):
                self.assertEqual(structure_tag(cyclic(n)), tag)

    def test_p_squared_tag_matches_isomorphism_to_cyclic_p_squared(self):
        for p in (2, 3, 5, 7, 11, 13):
            n = p * p
            shift = PermutationGeneratorSet(n, (tuple((i + 1) % n for i in range(n)),))
            as_permutations = build_from_perm_generators(shift)
            with self.subTest(p=p):
                self.assertTrue(is_isomorphic(as_permutations, cyclic(n)))
                self.assertEqual(structure_tag(as_permutations),
                                 StructureTag.of(TagKind.CYCLIC_P_SQUARED, p=p))
                elementary = abelian([p, p])
                self.assertFalse(is_isomorphic(elementary, cyclic(n)))
                self.assertNotEqual(structure_tag(elementary).kind, TagKind.CYCLIC_P_SQUARED)

    def test_rendering(self):
        self.assertEqual(str(structure_tag(cyclic(9))), 'CyclicPSquared(p=3)')
        self.assertEqual(str(structure_tag(dihedral(4))), 'Other')

    def test_quaternion(self):
        self.assertEqual(structure_tag(generalized_quaternion(4)),
                         StructureTag.of(TagKind.GENERALIZED_QUATERNION, n=4))
        self.assertTrue(is_generalized_quaternion(dicyclic(2)))
        self.assertFalse(is_generalized_quaternion(dihedral(4)))
        self.assertFalse(is_generalized_quaternion(dicyclic(3)))

    def test_odd_cyclic_times_quaternion(self):
        group = direct_product(cyclic(3), generalized_quaternion(3))
        self.assertEqual(structure_tag(group),
                         StructureTag.of(TagKind.CYCLIC_ODD_TIMES_QUATERNION, p=3, m=1, n=3))
        # same Sylow subgroups, but the C3 is not central
        self.assertEqual(structure_tag(dicyclic(6)).kind, TagKind.OTHER)

    def test_everything_else_is_other(self):
        for group in (abelian([2, 2]), symmetric(3), dicyclic(3), abelian([3, 3])):
            self.assertEqual(structure_tag(group).kind, TagKind.OTHER)

    def test_helpers(self):
        self.assertEqual(factorize(1), ())
        self.assertEqual(factorize(24), (2, 2, 2, 3))
        self.assertTrue(is_cyclic(abelian([2, 3])))
        self.assertFalse(is_cyclic(abelian([2, 2])))

    def test_known_families(self):
        cases = [
            (cyclic(12), 'cyclic'),
            (generalized_quaternion(4), 'generalized-quaternion'),
            (abelian([4, 4]), 'abelian-p-group'),
            (abelian([9, 9]), 'abelian-p-group'),
            (abelian([2, 4]), None),
            (dicyclic(3), None),
        ]
        for group, family in cases:
            with self.subTest(group=group.label):
                self.assertEqual(known_isolated_simple_family(group, structure_tag(group)), family)


class TheoremPredicateTests(SimpleTestCase):

    def test_consistent_values_hold(self):
        tag = StructureTag.of(TagKind.CYCLIC_P_SQUARED, p=2)
        self.assertTrue(theorem_predicate(tag, False, 1, 'C4').holds)

    def test_forward_failure(self):
        verdict = theorem_predicate(StructureTag.of(TagKind.OTHER), False, 1, 'X')
        self.assertFalse(verdict.holds)
        (failure,) = verdict.failures
        self.assertEqual((failure.part, failure.direction), ('b', 'forward'))

    def test_backward_failure(self):
        tag = StructureTag.of(TagKind.CYCLIC_PQ, p=2, q=3)
        verdict = theorem_predicate(tag, False, 3, 'Y')
        (failure,) = verdict.failures
        self.assertEqual((failure.part, failure.direction), ('c', 'backward'))

    def test_cp1_mismatch_fails_part_a(self):
        verdict = theorem_predicate(StructureTag.of(TagKind.OTHER), True, 3, 'Z')
        self.assertEqual([f.part for f in verdict.failures], ['a'])

    def test_exhaustive_catalog(self):
        catalog = build_catalog(15)
        self.assertEqual(catalog.class_counts(), [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1])
        by_k = {}
        for entry in catalog:
            _, report = analyze(entry.group)
            verdict = theorem_predicate(structure_tag(entry.group), report.is_cp1,
                                        report.deficiency_k, entry.canonical_label)
            self.assertTrue(verdict.holds, verdict.failures)
            by_k.setdefault(report.deficiency_k, set()).add(entry.canonical_label)
        self.assertEqual(by_k[1], {'C4', 'C9'})
        self.assertEqual(by_k[2], {'C6', 'C8', 'C10', 'C14', 'C15'})


class ClassicalFactTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.failures = {}
        for entry in catalog_24():
            group = entry.group
            tag = structure_tag(group)
            for fact in classical_facts(group, all_subgroups(group), tag):
                if not fact.holds:
                    cls.failures.setdefault(fact.fact, set()).add(entry.canonical_label)

    def test_few_maximal_subgroups_force_cyclic(self):
        self.assertNotIn('maximal-cyclic', self.failures)

    def test_unique_minimal_subgroup(self):
        self.assertNotIn('unique-minimal', self.failures)

    def test_two_minimal_subgroups_exceptions(self):
        # C_q x| C_4 and C_3 x| Q_8 with a unique involution
        self.assertEqual(self.failures.get('two-minimal'), {'Dic12', 'Dic20', 'Dic24'})

    def test_fixture_values(self):
        group = generalized_quaternion(3)
        facts = {f.fact: f for f in classical_facts(group, all_subgroups(group), structure_tag(group))}
        self.assertTrue(all(f.holds for f in facts.values()))
