from math import lcm

import numpy as np
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation

from .constructors import (
    abelian, cyclic, dicyclic, dihedral, direct_product, generalized_quaternion,
    heisenberg, metacyclic, semidirect_product,
)
from .exceptions import (
    InvalidParameter, InvalidPermutation, MalformedTable, NoIdentity, NoInverse,
    NotAHomomorphism, NotAnAutomorphism, NotAssociative, OrderCapExceeded,
)
from .isomorphism import find_isomorphism, greedy_generating_set, is_isomorphic
from .masks import mask_members, mask_of, popcount
from .permutations import (
    PermutationGeneratorSet, alternating, build_from_perm_generators, symmetric,
)
from .table import build_from_cayley


def relabeled(group, perm):
    """The same group with element x renamed perm[x]"""
    perm = np.asarray(perm)
    table = np.empty_like(group.mul)
    table[np.ix_(perm, perm)] = perm[group.mul]
    return build_from_cayley(table)


class BuildFromCayleyTests(SimpleTestCase):

    def test_identity_is_moved_to_index_zero(self):
        group = build_from_cayley([[1, 0], [0, 1]])
        self.assertEqual(group.order, 2)
        self.assertEqual(group.mul.tolist(), [[0, 1], [1, 0]])
        self.assertEqual(group.orders, (1, 2))

    def test_trivial_group(self):
        group = build_from_cayley([[0]])
        self.assertEqual(group.order, 1)
        self.assertEqual(group.orders, (1,))

    def test_no_identity(self):
        with self.assertRaises(NoIdentity):
            build_from_cayley([[0, 0], [0, 0]])

    def test_no_inverse_names_the_element(self):
        with self.assertRaises(NoInverse) as ctx:
            build_from_cayley([[0, 1, 2], [1, 1, 1], [2, 1, 2]])
        self.assertEqual(ctx.exception.element, 1)

    def test_non_associative_table_reports_a_triple(self):
        table = [[0, 1, 2], [1, 0, 0], [2, 0, 0]]
        with self.assertRaises(NotAssociative) as ctx:
            build_from_cayley(table)
        a, b, c = ctx.exception.triple
        self.assertNotEqual(table[table[a][b]][c], table[a][table[b][c]])

    def test_entry_out_of_range(self):
        with self.assertRaises(MalformedTable):
            build_from_cayley([[0, 1], [1, 2]])

    def test_not_square(self):
        with self.assertRaises(MalformedTable):
            build_from_cayley([[0, 1]])

    def test_cap_is_checked_before_validation(self):
        with self.assertRaises(OrderCapExceeded) as ctx:
            build_from_cayley(np.zeros((6, 6), dtype=int), cap=5)
        self.assertEqual((ctx.exception.order, ctx.exception.cap), (6, 5))

    @override_settings(ISOLATTA={'ORDER_CAP': 10})
    def test_cap_comes_from_settings(self):
        with self.assertRaises(OrderCapExceeded):
            cyclic(11)
        self.assertEqual(cyclic(11, cap=11).order, 11)

    def test_cap_setting_must_be_a_positive_integer(self):
        for raw in ('abc', '0', '-3', ''):
            with self.subTest(raw=raw), override_settings(ISOLATTA={'ORDER_CAP': raw}):
                with self.assertRaises(InvalidParameter):
                    cyclic(3)

    @override_settings(ISOLATTA={'ORDER_CAP': '12'})
    def test_cap_setting_is_parsed_from_text(self):
        self.assertEqual(cyclic(12).order, 12)
        with self.assertRaises(OrderCapExceeded):
            cyclic(13)


class ConstructorTests(SimpleTestCase):

    def test_cyclic_element_orders(self):
        group = cyclic(12)
        self.assertEqual(group.label, 'C12')
        self.assertEqual(group.orders, tuple(12 // np.gcd(x, 12) if x else 1 for x in range(12)))
        self.assertTrue(group.is_abelian)

    def test_dihedral_relations(self):
        group = dihedral(4)
        r, s = 1, 4
        self.assertEqual(group.label, 'D8')
        self.assertEqual((group.orders[r], group.orders[s]), (4, 2))
        # s r s = r^-1
        self.assertEqual(group.rows[group.rows[s][r]][s], group.inverses[r])
        self.assertEqual(group.order_multiset, ((1, 1), (2, 5), (4, 2)))
        self.assertEqual(group.center_order, 2)

    def test_quaternion_has_one_involution(self):
        for n in range(3, 7):
            group = generalized_quaternion(n)
            self.assertEqual(group.label, f'Q{2 ** n}')
            self.assertEqual(group.order, 2 ** n)
            self.assertEqual(sum(1 for o in group.orders if o == 2), 1)

    def test_quaternion_needs_n_at_least_3(self):
        with self.assertRaises(InvalidParameter):
            generalized_quaternion(2)

    def test_dicyclic_of_order_12(self):
        group = dicyclic(3)
        self.assertEqual(group.label, 'Dic12')
        self.assertEqual(group.order_multiset, ((1, 1), (2, 1), (3, 2), (4, 6), (6, 2)))

    def test_abelian_labels(self):
        self.assertEqual(abelian([2, 4]).label, 'A(2,4)')
        self.assertEqual(abelian([5]).label, 'C5')
        self.assertEqual(abelian([2, 2, 2]).exponent, 2)

    def test_direct_product(self):
        group = direct_product(cyclic(2), dihedral(3))
        self.assertEqual(group.order, 12)
        self.assertEqual(group.label, 'C2xD6')
        self.assertTrue(is_isomorphic(group, dihedral(6)))

    def test_semidirect_product_with_inversion_is_s3(self):
        c3, c2 = cyclic(3), cyclic(2)
        group = semidirect_product(c3, c2, {0: [0, 1, 2], 1: [0, 2, 1]})
        self.assertFalse(group.is_abelian)
        self.assertTrue(is_isomorphic(group, symmetric(3)))

    def test_semidirect_product_rejects_a_non_bijection(self):
        with self.assertRaises(NotAnAutomorphism):
            semidirect_product(cyclic(3), cyclic(2), {0: [0, 1, 2], 1: [0, 1, 1]})

    def test_semidirect_product_rejects_a_non_homomorphism(self):
        with self.assertRaises(NotAHomomorphism):
            semidirect_product(cyclic(3), cyclic(2), {0: [0, 2, 1], 1: [0, 2, 1]})

    def test_metacyclic(self):
        group = metacyclic(7, 3, 2)
        self.assertEqual(group.order, 21)
        self.assertFalse(group.is_abelian)
        with self.assertRaises(NotAHomomorphism):
            metacyclic(7, 3, 3)

    def test_heisenberg(self):
        group = heisenberg(3)
        self.assertEqual(group.order, 27)
        self.assertEqual(group.exponent, 3)
        self.assertEqual(group.center_order, 3)
        with self.assertRaises(InvalidParameter):
            heisenberg(2)

    def test_cap(self):
        with self.assertRaises(OrderCapExceeded):
            cyclic(300)
        with self.assertRaises(OrderCapExceeded):
            dihedral(6, cap=10)

    def test_generated_mask(self):
        group = dihedral(4)
        # two reflections generate a Klein four-group containing r^2
        mask = group.generated_mask(1, [4, 6])
        self.assertEqual(mask_members(mask), [0, 2, 4, 6])
        self.assertEqual(popcount(group.generated_mask(mask, [1])), 8)


class PermutationTests(SimpleTestCase):

    def test_symmetric_and_alternating_order_multisets(self):
        self.assertEqual(symmetric(4).order_multiset, ((1, 1), (2, 9), (3, 8), (4, 6)))
        self.assertEqual(alternating(4).order_multiset, ((1, 1), (2, 3), (3, 8)))
        self.assertEqual(symmetric(1).order, 1)

    def test_invalid_generator(self):
        with self.assertRaises(InvalidPermutation) as ctx:
            PermutationGeneratorSet(3, ((1, 2, 0), (0, 0, 1)))
        self.assertEqual(ctx.exception.index, 1)

    def test_images_outside_the_degree_are_rejected(self):
        with self.assertRaises(InvalidPermutation) as ctx:
            PermutationGeneratorSet(3, ((0, 1, 5),))
        self.assertEqual(ctx.exception.index, 0)

    def test_generators_become_sympy_permutations(self):
        gens = PermutationGeneratorSet(3, (Permutation([1, 2, 0]), (1, 0, 2)))
        self.assertTrue(all(isinstance(g, Permutation) for g in gens.generators))
        self.assertEqual(gens.generators[1].array_form, [1, 0, 2])

    def test_closure_indexes_in_discovery_order(self):
        group = build_from_perm_generators(PermutationGeneratorSet(3, ((1, 2, 0),)))
        self.assertEqual(group.order, 3)
        # 0 is the identity, 1 the generator, 2 its square
        self.assertEqual(group.rows[1][1], 2)
        self.assertEqual(group.rows[1][2], 0)

    def test_small_named_groups(self):
        self.assertEqual(symmetric(2).order, 2)
        self.assertEqual(alternating(2).order, 1)
        self.assertEqual(alternating(3).order, 3)
        self.assertEqual(alternating(5, cap=60).order, 60)

    def test_closure_stops_at_the_cap(self):
        gens = PermutationGeneratorSet(4, ((1, 0, 2, 3), (1, 2, 3, 0)))
        with self.assertRaises(OrderCapExceeded):
            build_from_perm_generators(gens, cap=20)
        self.assertEqual(build_from_perm_generators(gens, cap=24).order, 24)

    def test_factorial_precheck(self):
        with self.assertRaises(OrderCapExceeded):
            symmetric(6)


class IsomorphismTests(SimpleTestCase):

    def test_d8_and_q8_differ(self):
        self.assertFalse(is_isomorphic(dihedral(4), generalized_quaternion(3)))

    def test_three_presentations_of_s3(self):
        s3 = symmetric(3)
        self.assertTrue(is_isomorphic(dihedral(3), s3))
        self.assertTrue(is_isomorphic(metacyclic(3, 2, 2), s3))

    def test_abelian_invariants(self):
        self.assertTrue(is_isomorphic(direct_product(cyclic(2), cyclic(4)), abelian([2, 4])))
        self.assertFalse(is_isomorphic(cyclic(8), abelian([2, 4])))
        self.assertTrue(is_isomorphic(cyclic(6), abelian([2, 3])))

    def test_dicyclic_24_is_not_c3_times_q8(self):
        self.assertFalse(is_isomorphic(dicyclic(6), direct_product(cyclic(3), generalized_quaternion(3))))

    def test_find_isomorphism_returns_a_homomorphic_bijection(self):
        a, b = dihedral(6), direct_product(cyclic(2), symmetric(3))
        iso = find_isomorphism(a, b)
        self.assertIsNotNone(iso)
        self.assertEqual(sorted(iso), list(range(12)))
        for x in range(12):
            for y in range(12):
                self.assertEqual(iso[a.rows[x][y]], b.rows[iso[x]][iso[y]])

    def test_greedy_generating_set_generates(self):
        for group in (dihedral(5), generalized_quaternion(4), symmetric(4), heisenberg(3)):
            gens = greedy_generating_set(group)
            self.assertEqual(popcount(group.generated_mask(1, gens)), group.order)

    @settings(max_examples=25, deadline=None)
    @given(st.permutations(range(1, 12)))
    def test_relabeled_table_is_isomorphic(self, tail):
        group = dicyclic(3)
        self.assertTrue(is_isomorphic(group, relabeled(group, [0] + list(tail))))


class MaskTests(SimpleTestCase):

    @given(st.sets(st.integers(min_value=0, max_value=200)))
    def test_members_round_trip(self, elements):
        mask = mask_of(elements)
        self.assertEqual(mask_members(mask), sorted(elements))
        self.assertEqual(popcount(mask), len(elements))


class ConstructionPropertyTests(SimpleTestCase):

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=12))
    def test_direct_product_orders_are_lcms(self, m, n):
        a, b = cyclic(m), dihedral(n)
        group = direct_product(a, b)
        for x in range(m):
            for y in range(2 * n):
                self.assertEqual(group.orders[x * 2 * n + y], lcm(a.orders[x], b.orders[y]))

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(['cyclic', 'dihedral', 'dicyclic']), st.integers(min_value=1, max_value=20))
    def test_element_orders_match_a_power_loop(self, family, m):
        group = {'cyclic': cyclic, 'dihedral': dihedral, 'dicyclic': dicyclic}[family](m)
        for x in range(group.order):
            k, y = 1, x
            while y != 0:
                y = group.rows[y][x]
                k += 1
            self.assertEqual(group.orders[x], k)
            self.assertEqual(group.order % k, 0)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=3, max_value=12), st.integers(min_value=3, max_value=12))
    def test_isomorphism_is_symmetric(self, m, n):
        a, b = dihedral(m), dicyclic(n // 2 or 1)
        self.assertEqual(is_isomorphic(a, b), is_isomorphic(b, a))
        if a.order_multiset != b.order_multiset:
            self.assertFalse(is_isomorphic(a, b))
