# catalog/recipes.py
"""
Built-in catalog recipes.

Each family yields, for a given order, the group expressions it knows how
to build; the catalog evaluates them in registry order and deduplicates
by isomorphism, so overlaps between families are harmless.
"""
from abc import ABC, abstractmethod
from itertools import product
from math import factorial, prod

from sympy import divisors, factorint, n_order, primefactors
from sympy.utilities.iterables import partitions


class RecipeFamily(ABC):
    """A family of groups that can be listed order by order"""

    name = 'unknown'
    nonabelian = True

    @abstractmethod
    def specs(self, order):
        """Group expressions of exactly this order"""
        return []


class AbelianRecipes(RecipeFamily):
    """Every abelian group: one partition of each prime exponent"""

    name = 'abelian'
    nonabelian = False

    def specs(self, order):
        per_prime = []
        for p, e in sorted(factorint(order).items()):
            choices = []
            for part in partitions(e):
                exponents = sorted((k for k, m in part.items() for _ in range(m)), reverse=True)
                choices.append([p ** a for a in exponents])
            per_prime.append(choices)

        found = []
        for combo in product(*per_prime):
            width = max((len(c) for c in combo), default=0)
            # invariant factors, largest first
            factors = [prod(c[i] for c in combo if i < len(c)) for i in range(width)]
            found.append(sorted(factors) or [1])
        found.sort(key=lambda fs: (len(fs), fs))
        return [f'C{fs[0]}' if len(fs) == 1 else f'A({",".join(map(str, fs))})' for fs in found]


class DihedralRecipes(RecipeFamily):
    name = 'dihedral'

    def specs(self, order):
        return [f'D{order}'] if order >= 6 and order % 2 == 0 else []


class DicyclicRecipes(RecipeFamily):
    """Generalized quaternion 2-groups and the other dicyclic groups"""

    name = 'dicyclic'

    def specs(self, order):
        if order < 8 or order % 4:
            return []
        if order & (order - 1) == 0:
            return [f'Q{order}']
        return [f'Dic{order}']


class MetacyclicRecipes(RecipeFamily):
    """C_q x| C_k acting faithfully, for primes q and k > 1 dividing q - 1"""

    name = 'metacyclic'

    def specs(self, order):
        found = []
        for q in primefactors(order):
            k = order // q
            if k > 1 and (q - 1) % k == 0:
                r = next(r for r in range(2, q) if n_order(r, q) == k)
                found.append(f'M({q},{k},{r})')
        return found


class PrimeCubedRecipes(RecipeFamily):
    """The two non-abelian groups of order p^3 for odd p"""

    name = 'prime-cubed'

    def specs(self, order):
        factors = factorint(order)
        if len(factors) != 1:
            return []
        (p, e), = factors.items()
        if e != 3 or p == 2:
            return []
        return [f'M({p * p},{p},{1 + p})', f'Heis{p}']


class PermutationRecipes(RecipeFamily):
    name = 'permutation'

    def specs(self, order):
        found = []
        d = 3
        while factorial(d) // 2 <= order:
            if factorial(d) == order:
                found.append(f'S{d}')
            if d >= 4 and factorial(d) // 2 == order:
                found.append(f'Alt{d}')
            d += 1
        return found


BASE_FAMILIES = [
    AbelianRecipes(),
    DihedralRecipes(),
    DicyclicRecipes(),
    MetacyclicRecipes(),
    PrimeCubedRecipes(),
    PermutationRecipes(),
]


class CyclicExtensionRecipes(RecipeFamily):
    """C_k x B for every non-abelian base group B of a smaller order"""

    name = 'cyclic-times-base'

    def specs(self, order):
        found = []
        for d in divisors(order):
            if d < 6 or d == order:
                continue
            for family in BASE_FAMILIES:
                if family.nonabelian:
                    found.extend(f'C{order // d}x{base}' for base in family.specs(d))
        return found


RECIPE_FAMILIES = BASE_FAMILIES + [CyclicExtensionRecipes()]


def recipe_specs(order):
    """Every built-in expression of this order, in registry order"""
    return [spec for family in RECIPE_FAMILIES for spec in family.specs(order)]
