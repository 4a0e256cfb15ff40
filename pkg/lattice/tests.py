from functools import lru_cache
from itertools import combinations

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from sympy import divisor_count, divisors

from catalog import build_catalog
from groups import (
    abelian, alternating, cyclic, dihedral, generalized_quaternion, symmetric,
)
from groups.masks import mask_of

from .enumeration import all_subgroups
from .exceptions import ParentMismatch
from .subgroups import (
    Subgroup, conjugates, cyclic_subgroup, intersect, is_normal, join, normalizer,
    trivial_subgroup, whole_group,
)


@lru_cache(maxsize=None)
def catalog_24():
    return build_catalog(24)


def _closes(rows, members):
    return all(rows[a][b] in members for a in members for b in members)


def brute_force_subgroups(group):
    """Every identity-containing subset of divisor size closed under multiplication"""
    n, rows = group.order, group.rows
    found = set()
    for size in divisors(n):
        for rest in combinations(range(1, n), size - 1):
            members = frozenset((0, *rest))
            if _closes(rows, members):
                found.add(mask_of(members))
    return found


class AllSubgroupsTests(SimpleTestCase):

    def test_known_lattice_sizes(self):
        cases = [
            (cyclic(1), 1), (cyclic(4), 3), (cyclic(12), 6), (dihedral(4), 10),
            (generalized_quaternion(3), 6), (symmetric(3), 6), (alternating(4), 10),
            (symmetric(4), 30), (abelian([2, 2]), 5),
        ]
        for group, size in cases:
            with self.subTest(group=group.label):
                self.assertEqual(len(all_subgroups(group)), size)

    def test_canonical_order(self):
        lattice = all_subgroups(dihedral(4))
        self.assertTrue(lattice[0].is_trivial())
        self.assertTrue(lattice[lattice.top].is_whole())
        keys = [s.sort_key for s in lattice]
        self.assertEqual(keys, sorted(keys))

    def test_quaternion_lattice(self):
        lattice = all_subgroups(generalized_quaternion(3))
        self.assertEqual([s.order for s in lattice], [1, 2, 4, 4, 4, 8])
        self.assertEqual(len(lattice.minimal), 1)
        self.assertEqual(len(lattice.maximal), 3)

    def test_brute_force_oracle_up_to_order_24(self):
        for entry in catalog_24():
            with self.subTest(group=entry.canonical_label):
                lattice = all_subgroups(entry.group)
                self.assertEqual({s.mask for s in lattice}, brute_force_subgroups(entry.group))

    def test_covers_of_a_chain(self):
        lattice = all_subgroups(cyclic(8))
        self.assertEqual(lattice.covers(), [(0, 1), (1, 2), (2, 3)])

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_meet_and_join_stay_in_the_lattice(self, data):
        entry = data.draw(st.sampled_from(catalog_24().entries))
        lattice = all_subgroups(entry.group)
        i = data.draw(st.integers(min_value=0, max_value=lattice.top))
        j = data.draw(st.integers(min_value=0, max_value=lattice.top))
        h, k = lattice[i], lattice[j]
        self.assertEqual(lattice[lattice.meet(i, j)], intersect(h, k))
        self.assertEqual(lattice[lattice.join(i, j)], join(h, k))
        self.assertEqual(lattice.is_leq(i, j), h <= k)


class SubgroupOperationTests(SimpleTestCase):

    def setUp(self):
        self.d8 = dihedral(4)
        self.s = cyclic_subgroup(self.d8, 4)

    def test_join_of_two_reflections(self):
        joined = join(self.s, cyclic_subgroup(self.d8, 6))
        self.assertEqual(joined.order, 4)
        self.assertIn(2, joined)

    def test_intersect(self):
        klein = Subgroup(self.d8, mask_of([0, 2, 4, 6]))
        rotations = cyclic_subgroup(self.d8, 1)
        self.assertEqual(intersect(klein, rotations).members, (0, 2))

    def test_mixed_parents_are_rejected(self):
        other = dihedral(4)
        with self.assertRaises(ParentMismatch):
            join(self.s, cyclic_subgroup(other, 4))
        with self.assertRaises(ParentMismatch):
            intersect(self.s, trivial_subgroup(other))

    def test_normality(self):
        self.assertFalse(is_normal(self.d8, self.s))
        self.assertTrue(is_normal(self.d8, trivial_subgroup(self.d8)))
        self.assertTrue(is_normal(self.d8, whole_group(self.d8)))
        self.assertTrue(is_normal(self.d8, cyclic_subgroup(self.d8, 1)))

    def test_abelian_subgroups_are_normal(self):
        group = abelian([4, 4])
        self.assertTrue(all(is_normal(group, s) for s in all_subgroups(group)))

    def test_conjugates(self):
        self.assertEqual(len(conjugates(self.d8, self.s)), 2)
        q8 = generalized_quaternion(3)
        c4 = cyclic_subgroup(q8, 1)
        self.assertEqual(conjugates(q8, c4), [c4])

    def test_normalizer(self):
        self.assertEqual(normalizer(self.d8, self.s).members, (0, 2, 4, 6))

    def test_orbit_size_is_the_normalizer_index(self):
        group = symmetric(4)
        for h in all_subgroups(group):
            n = normalizer(group, h)
            self.assertEqual(len(conjugates(group, h)), group.order // n.order)
            self.assertEqual(is_normal(group, h), n.is_whole())


class CyclicLatticeTests(SimpleTestCase):

    def test_one_subgroup_per_divisor(self):
        for n in range(1, 101):
            self.assertEqual(len(all_subgroups(cyclic(n))), divisor_count(n), n)
