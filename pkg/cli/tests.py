import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from catalog import build_group
from classifier import theorem_predicate


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


class AnalyzeCommandTests(SimpleTestCase):

    def test_human_output(self):
        output = run('analyze', 'D8')
        self.assertIn('group: D8', output)
        self.assertIn('|L(G)|: 10', output)
        self.assertIn('k: 3', output)
        self.assertIn('CP1: no', output)

    def test_json_output_is_self_consistent(self):
        doc = json.loads(run('analyze', 'Q8', format='json'))
        self.assertEqual(doc['format_version'], 1)
        self.assertEqual(doc['lattice_size'], len(doc['subgroups']))
        self.assertEqual(doc['deficiency_k'], sum(1 for row in doc['subgroups'] if not row['isolated']))
        self.assertEqual(doc['deficiency_k'], 4)
        self.assertTrue(doc['is_isolated_simple'])
        self.assertEqual(doc['known_family'], 'generalized-quaternion')

        group = build_group('Q8')
        for row in doc['subgroups']:
            if row['isolated']:
                self.assertIsNone(row['witness'])
                continue
            x = row['witness']
            self.assertNotIn(x, row['members'])
            powers = {group.power(x, k) for k in range(group.orders[x])}
            self.assertTrue(powers & set(row['members']) - {0})

    def test_output_is_deterministic(self):
        self.assertEqual(run('analyze', 'C3xQ8', format='json'), run('analyze', 'C3xQ8', format='json'))
        self.assertEqual(run('analyze', 'S4'), run('analyze', 'S4'))

    def test_usage_errors_exit_2(self):
        cases = [
            (('analyze', 'C7x'), {}),
            (('analyze', 'D7'), {}),
            (('analyze', 'C300'), {}),
            (('analyze', 'C12'), {'cap': 10}),
            (('analyze', 'perm:/nonexistent/gens.txt'), {}),
            (('analyze', 'C4'), {'cap': 0}),
        ]
        for args, options in cases:
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    run(*args, **options)
                self.assertEqual(ctx.exception.returncode, 2)

    def test_undecodable_cayley_file_exits_2(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.txt'
            path.write_bytes(b'2\n0 1\n1 \xff0\n')
            with self.assertRaises(CommandError) as ctx:
                run('analyze', f'cayley:{path}')
        self.assertEqual(ctx.exception.returncode, 2)

    @override_settings(ISOLATTA={'ORDER_CAP': 'lots'})
    def test_non_numeric_cap_setting_exits_2(self):
        with self.assertRaises(CommandError) as ctx:
            run('analyze', 'C4')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('ISOLATTA_CAP', str(ctx.exception))

    def test_syntax_error_names_the_position(self):
        with self.assertRaises(CommandError) as ctx:
            run('analyze', 'C7x')
        self.assertIn('position 3', str(ctx.exception))


class VerifyCommandTests(SimpleTestCase):

    def test_passes_up_to_order_12(self):
        doc = json.loads(run('verify', max_order=12, format='json'))
        self.assertTrue(doc['ok'])
        self.assertEqual(doc['groups_checked'], 24)
        self.assertEqual({part: tally['failed'] for part, tally in doc['parts'].items()},
                         {'a': 0, 'b': 0, 'c': 0})
        self.assertEqual(doc['classical_facts']['two-minimal']['failed'], 1)
        self.assertEqual(doc['failures'], [])

    def test_human_summary(self):
        output = run('verify', max_order=15)
        self.assertIn('verified 28 groups of order <= 15', output)
        self.assertIn('sampled orders: none', output)
        self.assertTrue(output.rstrip().endswith('OK'))

    def test_counterexample_exits_1(self):
        def flipped(tag, is_cp1, k, label=''):
            return theorem_predicate(tag, not is_cp1, k, label)

        with mock.patch('cli.reports.theorem_predicate', side_effect=flipped):
            with self.assertRaises(CommandError) as ctx:
                run('verify', max_order=4)
        self.assertEqual(ctx.exception.returncode, 1)

    def test_counterexample_dump(self):
        def flipped(tag, is_cp1, k, label=''):
            return theorem_predicate(tag, not is_cp1, k, label)

        out = StringIO()
        with mock.patch('cli.reports.theorem_predicate', side_effect=flipped):
            with self.assertRaises(CommandError):
                call_command('verify', max_order=4, format='json', stdout=out, stderr=StringIO())
        doc = json.loads(out.getvalue())
        self.assertFalse(doc['ok'])
        self.assertEqual({f['label'] for f in doc['failures']}, {'C1', 'C2', 'C3', 'C4', 'A(2,2)'})
        c4 = next(f for f in doc['failures'] if f['label'] == 'C4')
        self.assertEqual([row['members'] for row in c4['non_isolated']], [[0, 2]])

    def test_bad_max_order(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify', max_order=0)
        self.assertEqual(ctx.exception.returncode, 2)


class SearchCommandTests(SimpleTestCase):

    def test_novel_candidates_are_marked(self):
        doc = json.loads(run('search', max_order=12, format='json'))
        novel = [hit['label'] for hit in doc['hits'] if hit['novel_candidate']]
        self.assertEqual(novel, ['Dic12'])
        output = run('search', max_order=12)
        self.assertIn('NOVEL CANDIDATE', output)


class CatalogCommandTests(SimpleTestCase):

    def test_listing(self):
        lines = run('catalog', max_order=8).strip().split('\n')
        self.assertEqual(len(lines), 14)
        self.assertEqual(lines[0], '1\t1\tC1\texhaustive')
        self.assertTrue(all(len(line.split('\t')) == 4 for line in lines))
        self.assertEqual(lines[-1], '8\t14\tQ8\texhaustive')


class ExportDotCommandTests(SimpleTestCase):

    def test_d8_diagram(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'd8.gv'
            run('export_dot', 'D8', out=str(path))
            text = path.read_text()
        self.assertTrue(text.startswith('digraph "D8" {'))
        self.assertEqual(text.count('[label='), 10)
        self.assertEqual(text.count('style=dashed'), 3)
        self.assertEqual(text.count('rank = same'), 4)
        self.assertIn('"0" [label="1:0"]', text)

    def test_stdout(self):
        text = run('export_dot', 'C4')
        self.assertIn('"0" -> "1";', text)
        self.assertIn('"1" -> "2";', text)
        self.assertNotIn('"0" -> "2";', text)
