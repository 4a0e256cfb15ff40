# catalog/__init__.py
from .spec_parser import Family, FileSource, Product, build_group, evaluate_spec, parse_spec
from .coverage import EXHAUSTIVE, SAMPLED, coverage_for
from .recipes import RECIPE_FAMILIES, RecipeFamily, recipe_specs
from .services import (
    Catalog, CatalogEntry, SearchHit, build_catalog, load_extra_groups, search_isolated_simple,
)

__all__ = [
    'Family', 'FileSource', 'Product', 'build_group', 'evaluate_spec', 'parse_spec',
    'EXHAUSTIVE', 'SAMPLED', 'coverage_for',
    'RECIPE_FAMILIES', 'RecipeFamily', 'recipe_specs',
    'Catalog', 'CatalogEntry', 'SearchHit', 'build_catalog', 'load_extra_groups',
    'search_isolated_simple',
]
