import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from groups import is_isomorphic, symmetric
from groups.exceptions import OrderCapExceeded, TableFormatError
from groups.io import read_cayley_table, read_perm_generators
from isolation import analyze

from .coverage import EXHAUSTIVE, SAMPLED, coverage_for
from .exceptions import SpecEvaluationError, SpecSyntaxError
from .recipes import AbelianRecipes, recipe_specs
from .services import build_catalog, search_isolated_simple
from .spec_parser import Family, Product, build_group, parse_spec

S4_GENERATORS = '4\n1 0 2 3\n1 2 3 0\n'


class SpecParserTests(SimpleTestCase):

    def test_families(self):
        cases = {
            'C7': 7, 'A(2,4)': 8, 'D8': 8, 'Q16': 16, 'Dic12': 12, 'S4': 24,
            'Alt4': 12, 'M(7,3,2)': 21, 'Heis3': 27,
        }
        for text, order in cases.items():
            with self.subTest(spec=text):
                group = build_group(text)
                self.assertEqual(group.order, order)
                self.assertEqual(group.label, text)

    def test_products_and_parentheses(self):
        spec = parse_spec('(C2xC2) x C3')
        self.assertIsInstance(spec, Product)
        self.assertEqual(spec.render(), '(C2xC2)xC3')
        self.assertEqual(build_group('C2xD8').order, 16)
        self.assertEqual(parse_spec('D8'), Family('D', (8,)))

    def test_syntax_error_position(self):
        with self.assertRaises(SpecSyntaxError) as ctx:
            parse_spec('C7x')
        self.assertEqual(ctx.exception.position, 3)
        with self.assertRaises(SpecSyntaxError) as ctx:
            parse_spec('Z4')
        self.assertEqual(ctx.exception.position, 0)

    def test_bad_parameters(self):
        for text in ('D7', 'Q12', 'Dic10', 'M(7,3)', 'M(7,3,3)', 'Heis4', 'C0'):
            with self.subTest(spec=text):
                with self.assertRaises(SpecEvaluationError):
                    build_group(text)

    def test_cap_propagates(self):
        with self.assertRaises(OrderCapExceeded):
            build_group('C300')
        with self.assertRaises(OrderCapExceeded):
            build_group('S4xC3', cap=50)

    def test_file_sources(self):
        with tempfile.TemporaryDirectory() as tmp:
            perm = Path(tmp) / 's4.txt'
            perm.write_text(S4_GENERATORS)
            cayley = Path(tmp) / 'c3.txt'
            cayley.write_text('3\n0 1 2\n1 2 0\n2 0 1\n')
            self.assertTrue(is_isomorphic(build_group(f'perm:{perm}'), symmetric(4)))
            group = build_group(f'cayley:{cayley} x C2')
            self.assertEqual(group.order, 6)
            self.assertEqual(analyze(group)[1].deficiency_k, 2)


class FileFormatTests(SimpleTestCase):

    def _write(self, text):
        handle = tempfile.NamedTemporaryFile('w', suffix='.txt', delete=False)
        handle.write(text)
        handle.close()
        self.addCleanup(Path(handle.name).unlink)
        return handle.name

    def test_cayley_rows(self):
        self.assertEqual(read_cayley_table(self._write('2\n\n0 1\n1 0\n')), [[0, 1], [1, 0]])

    def test_cayley_errors_carry_line_numbers(self):
        cases = [
            ('2\n0 1\n1\n', 3),
            ('2\n0 1\n1 0\n0 1\n', 4),
            ('2\n0 1\n', 2),
            ('x\n', 1),
            ('', 1),
        ]
        for text, line in cases:
            with self.subTest(text=text):
                with self.assertRaises(TableFormatError) as ctx:
                    read_cayley_table(self._write(text))
                self.assertEqual(ctx.exception.line, line)

    def test_generator_file(self):
        gens = read_perm_generators(self._write(S4_GENERATORS))
        self.assertEqual(gens.degree, 4)
        self.assertEqual(len(gens.generators), 2)
        with self.assertRaises(TableFormatError):
            read_perm_generators(self._write('3\n1 0\n'))

    def test_missing_file(self):
        with self.assertRaises(TableFormatError):
            read_cayley_table('/nonexistent/table.txt')

    def test_invalid_utf8_is_a_format_error(self):
        handle = tempfile.NamedTemporaryFile('wb', suffix='.txt', delete=False)
        handle.write(b'2\n0 1\n1 \xff0\n')
        handle.close()
        self.addCleanup(Path(handle.name).unlink)
        for reader in (read_cayley_table, read_perm_generators):
            with self.subTest(reader=reader.__name__):
                with self.assertRaises(TableFormatError) as ctx:
                    reader(handle.name)
                self.assertEqual(ctx.exception.line, 0)


class RecipeTests(SimpleTestCase):

    def test_abelian_invariant_factors(self):
        self.assertEqual(AbelianRecipes().specs(1), ['C1'])
        self.assertEqual(AbelianRecipes().specs(12), ['C12', 'A(2,6)'])
        self.assertEqual(AbelianRecipes().specs(8), ['C8', 'A(2,4)', 'A(2,2,2)'])

    def test_order_8(self):
        self.assertEqual(recipe_specs(8), ['C8', 'A(2,4)', 'A(2,2,2)', 'D8', 'Q8'])

    def test_every_recipe_builds_a_group_of_its_order(self):
        for n in range(1, 25):
            for text in recipe_specs(n):
                with self.subTest(spec=text):
                    self.assertEqual(build_group(text).order, n)


class CoverageTests(SimpleTestCase):

    def test_coverage(self):
        for n in list(range(1, 16)) + [17, 21, 22, 25, 27, 35, 121]:
            self.assertEqual(coverage_for(n), EXHAUSTIVE, n)
        for n in (16, 18, 20, 24, 36):
            self.assertEqual(coverage_for(n), SAMPLED, n)


class CatalogTests(SimpleTestCase):

    def test_class_counts_up_to_15(self):
        catalog = build_catalog(15)
        self.assertEqual(catalog.class_counts(), [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1])
        self.assertEqual(len(catalog), 28)
        self.assertEqual([e.iso_class_id for e in catalog], list(range(1, 29)))

    def test_deduplication_is_stable(self):
        first = [(e.iso_class_id, e.canonical_label) for e in build_catalog(12)]
        second = [(e.iso_class_id, e.canonical_label) for e in build_catalog(12)]
        self.assertEqual(first, second)

    def test_aliases(self):
        catalog = build_catalog(6)
        entry = catalog.find('S3')
        self.assertEqual(entry.canonical_label, 'D6')
        self.assertIn('M(3,2,2)', entry.aliases)

    def test_classes_are_pairwise_non_isomorphic(self):
        catalog = build_catalog(16)
        for n in range(1, 17):
            entries = catalog.of_order(n)
            for i, a in enumerate(entries):
                for b in entries[i + 1:]:
                    self.assertFalse(is_isomorphic(a.group, b.group), (a.canonical_label, b.canonical_label))

    def test_max_order_over_the_cap(self):
        with self.assertRaises(OrderCapExceeded):
            build_catalog(30, cap=20)

    def test_extra_groups(self):
        with tempfile.TemporaryDirectory() as tmp:
            Path(tmp, 'sym4.txt').write_text(S4_GENERATORS)
            Path(tmp, 'sym5.txt').write_text('5\n1 0 2 3 4\n1 2 3 4 0\n')
            with self.assertLogs('catalog', 'WARNING'):
                catalog = build_catalog(24, extra_dir=tmp)
        self.assertIn('sym4', catalog.find('S4').aliases)
        self.assertIsNone(catalog.find('sym5'))


class SearchTests(SimpleTestCase):

    def test_isolated_simple_up_to_12(self):
        hits = search_isolated_simple(build_catalog(12))
        by_label = {hit.entry.canonical_label: hit for hit in hits}
        self.assertEqual({label for label, hit in by_label.items() if hit.novel_candidate}, {'Dic12'})
        self.assertEqual(by_label['Q8'].family, 'generalized-quaternion')
        self.assertEqual(by_label['C12'].family, 'cyclic')
        self.assertNotIn('D8', by_label)
        self.assertTrue(all(hit.report.is_isolated_simple for hit in hits))
