from functools import lru_cache

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from sympy import divisor_count, prime

from catalog import build_catalog
from groups import (
    abelian, alternating, cyclic, dicyclic, dihedral, generalized_quaternion, symmetric,
)
from groups.masks import mask_of
from lattice import (
    Subgroup, all_subgroups, conjugates, cyclic_subgroup, trivial_subgroup, whole_group,
)
from lattice.tests import catalog_24

from .services import (
    analyze, is_cp1, is_isolated, is_isolated_simple, isolation_witness,
    non_isolated_closed_under_conjugation,
)


def isolated_by_definition(group, h):
    """x in H, or <x> meets H in the identity only, for every x"""
    members = set(h.members)
    for x in range(group.order):
        powers = {group.power(x, k) for k in range(group.orders[x])}
        if x not in members and powers & members != {0}:
            return False
    return True


def exponent_lists(p, bound, smallest=2):
    """Non-decreasing exponent lists, each exponent >= 2, with p^sum <= bound"""
    lists = []
    a = smallest
    while p ** a <= bound:
        lists.append([a])
        lists.extend([a] + rest for rest in exponent_lists(p, bound // p ** a, a))
        a += 1
    return lists


class IsolationTests(SimpleTestCase):

    def test_trivial_and_whole_group_are_isolated(self):
        for group in (cyclic(9), dihedral(5), symmetric(4)):
            self.assertTrue(is_isolated(group, trivial_subgroup(group)))
            self.assertTrue(is_isolated(group, whole_group(group)))

    def test_z2_in_z4_is_not_isolated(self):
        group = cyclic(4)
        h = cyclic_subgroup(group, 2)
        self.assertFalse(is_isolated(group, h))
        witness = isolation_witness(group, h)
        self.assertNotIn(witness, h)
        self.assertIn(2, cyclic_subgroup(group, witness))

    def test_dihedral_fixtures(self):
        group = dihedral(4)
        self.assertTrue(is_isolated(group, cyclic_subgroup(group, 4)))
        self.assertFalse(is_isolated(group, Subgroup(group, mask_of([0, 2, 4, 6]))))

    def test_d8_non_isolated_are_center_and_the_klein_groups(self):
        group = dihedral(4)
        lattice, report = analyze(group)
        self.assertEqual(report.lattice_size, 10)
        self.assertEqual(report.deficiency_k, 3)
        found = sorted(lattice[i].members for i in report.non_isolated)
        self.assertEqual(found, [(0, 2), (0, 2, 4, 6), (0, 2, 5, 7)])
        self.assertFalse(report.is_isolated_simple)

    def test_q8_is_isolated_simple(self):
        group = generalized_quaternion(3)
        lattice, report = analyze(group)
        self.assertEqual(report.deficiency_k, 4)
        self.assertEqual([i for i, flag in enumerate(report.isolated) if flag], [0, lattice.top])
        self.assertTrue(report.is_isolated_simple)
        self.assertTrue(all(report.normal.values()))

    def test_report_values(self):
        cases = [
            (symmetric(3), 6, 0),
            (cyclic(4), 3, 1),
            (cyclic(8), 4, 2),
            (cyclic(6), 4, 2),
            (cyclic(12), 6, 4),
            (dicyclic(3), 8, 6),
        ]
        for group, size, k in cases:
            with self.subTest(group=group.label):
                _, report = analyze(group)
                self.assertEqual((report.lattice_size, report.deficiency_k), (size, k))
                self.assertEqual(report.isolated_count, size - k)

    def test_cp1(self):
        self.assertTrue(is_cp1(abelian([2, 2])))
        self.assertTrue(is_cp1(alternating(4)))
        self.assertTrue(is_cp1(cyclic(1)))
        self.assertFalse(is_cp1(cyclic(4)))
        self.assertFalse(is_cp1(symmetric(4)))

    def test_prime_power_witnesses(self):
        for p in (2, 3, 5, 7, 11, 13):
            for k in range(1, 7):
                if p ** (k + 1) > 200:
                    break
                with self.subTest(p=p, k=k):
                    self.assertEqual(analyze(cyclic(p ** (k + 1)))[1].deficiency_k, k)

    def test_squarefree_witnesses(self):
        # Z_n has one subgroup per divisor, and all but 1 and G fail to be isolated
        for k in range(1, 4):
            n = 1
            for i in range(1, k + 1):
                n *= prime(i)
            with self.subTest(n=n):
                self.assertEqual(analyze(cyclic(n))[1].deficiency_k, 2 ** k - 2)
                self.assertEqual(divisor_count(n) - 2, 2 ** k - 2)

    def test_isolated_simple_examples(self):
        groups = [cyclic(n) for n in range(1, 201)]
        groups += [generalized_quaternion(n) for n in range(3, 8)]
        groups += [abelian([p ** a for a in exponents])
                   for p in (2, 3) for exponents in exponent_lists(p, 200)]
        for group in groups:
            with self.subTest(group=group.label):
                lattice = all_subgroups(group)
                self.assertTrue(is_isolated_simple(group, lattice))

    def test_exponent_lists(self):
        self.assertEqual(exponent_lists(3, 200), [[2], [2, 2], [3], [4]])
        self.assertIn([2, 2, 3], exponent_lists(2, 200))
        self.assertNotIn([2, 2, 2, 2], exponent_lists(2, 200))

    def test_s3_is_not_isolated_simple(self):
        group = symmetric(3)
        self.assertFalse(is_isolated_simple(group, all_subgroups(group)))

    def test_definitional_recheck_over_the_catalog(self):
        for entry in catalog_24():
            group = entry.group
            lattice, report = analyze(group)
            with self.subTest(group=entry.canonical_label):
                self.assertEqual(list(report.isolated),
                                 [isolated_by_definition(group, h) for h in lattice])
                self.assertEqual(report.is_cp1, report.deficiency_k == 0)
                self.assertTrue(non_isolated_closed_under_conjugation(group, lattice, report))

    @settings(max_examples=20, deadline=None)
    @given(st.data())
    def test_witnesses_really_violate(self, data):
        entry = data.draw(st.sampled_from(catalog_24().entries))
        group = entry.group
        lattice, report = analyze(group)
        for i, x in report.witnesses.items():
            h = lattice[i]
            self.assertNotIn(x, h)
            self.assertNotEqual(group.cyclic_masks[x] & h.mask, 1)


@lru_cache(maxsize=None)
def catalog_48():
    return build_catalog(48)


class ConjugationInvarianceTests(SimpleTestCase):

    def test_conjugates_share_the_isolation_flag_up_to_order_48(self):
        for entry in catalog_48():
            group = entry.group
            lattice, report = analyze(group)
            with self.subTest(group=entry.canonical_label):
                for i, h in enumerate(lattice):
                    for c in conjugates(group, h):
                        self.assertEqual(report.isolated[lattice.index_of(c)], report.isolated[i])
                self.assertTrue(non_isolated_closed_under_conjugation(group, lattice, report))
