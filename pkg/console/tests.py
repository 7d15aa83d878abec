# console/tests.py
import io
import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from arc_algebra.models import CheckRun
from arc_algebra.serializers import load_structure_table
from arc_algebra.services import AlgebraService
from diagrams.types import Shape

from .runner import run


def call(*args):
    out = io.StringIO()
    call_command(*args, stdout=out, stderr=io.StringIO())
    return out.getvalue()


def run_captured(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class EnumerateCommandTestCase(SimpleTestCase):
    """Тесты перечисления"""

    def test_standard_weights(self):
        """Тест пяти стандартных весов формы (3,2)"""
        rows = call('enumerate', '--n', '5', '--k', '2', '--standard').splitlines()
        self.assertEqual(len(rows), 5)

    def test_weight_order(self):
        """Тест порядка весов (4,2)"""
        rows = call('enumerate', '--n', '4', '--k', '2').splitlines()
        self.assertEqual([row.split('\t')[1] for row in rows], ['^^vv', '^v^v', 'v^^v', '^vv^', 'v^v^', 'vv^^'])

    def test_tableaux_json(self):
        """Тест таблиц в JSON"""
        rows = json.loads(call('enumerate', '--n', '4', '--k', '2', '--tableaux', '--format', 'json'))
        self.assertEqual(len(rows), 2)
        self.assertEqual({row['diagram'] for row in rows}, {'(1,4) (2,3)', '(1,2) (3,4)'})


class DiagramCommandsTestCase(SimpleTestCase):
    """Тесты диаграмм, склеек и неподвижных точек"""

    def test_cup(self):
        """Тест вывода m(w) и C(w)"""
        output = call('cup', '--w', 'v^v^')
        self.assertEqual(output.splitlines()[0], 'm(v^v^) = (1,2) (3,4)')
        self.assertIn('C(v^v^) = (1,2) (3,4)', output)

    def test_glue_census(self):
        """Тест переписи компонент"""
        output = call('glue', '--a', 'vv^^', '--b', 'vv^^').splitlines()
        self.assertEqual(output[:2], ['circles: 2', 'lines: 0'])
        self.assertIn('1\tcircle\t2 3\tinside 0', output)

    def test_fixed_points(self):
        """Тест двух неподвижных точек пары (v^v^, vv^^)"""
        output = call('fixedpoints', '--n', '4', '--k', '2', '--a', 'v^v^', '--b', 'vv^^')
        self.assertEqual(output.splitlines()[0], 'count: 2')
        exhaustive = call('fixedpoints', '--n', '4', '--k', '2', '--a', 'v^v^', '--b', 'vv^^', '--exhaustive')
        self.assertEqual(output, exhaustive)

    def test_empty_intersection(self):
        """Тест пустого пересечения"""
        output = call('fixedpoints', '--n', '4', '--k', '2', '--a', '^^vv', '--b', 'v^^v', '--format', 'json')
        self.assertEqual(json.loads(output)['count'], 0)


class CohomologyCommandTestCase(SimpleTestCase):
    """Тесты когомологий"""

    def test_stable_manifold(self):
        """Тест кольца устойчивого многообразия vv^^"""
        output = call('cohomology', '--w', 'vv^^').splitlines()
        self.assertIn('generators: x1 x2', output)
        self.assertIn('dimension: 4', output)
        self.assertIn('x4 -> -x1', output)

    def test_intersection(self):
        """Тест пересечения и пустого случая"""
        self.assertIn('dimension: 2', call('cohomology', '--w', 'v^v^', '--w2', 'vv^^').splitlines())
        self.assertIn('пустое пересечение', call('cohomology', '--w', '^^vv', '--w2', 'v^^v'))


class AlgebraCommandsTestCase(SimpleTestCase):
    """Тесты умножения и таблиц"""

    def test_multiply_twisted(self):
        """Тест произведения единиц через nxt при α = -1"""
        output = call('multiply', '--alpha', '-1', '--left', 'vv^^,v^v^', '--right', 'v^v^,vv^^')
        self.assertEqual(output, 'x1 - x2\n')
        nested = call('multiply', '--nested', '--left', 'vv^^,v^v^', '--right', 'v^v^,vv^^')
        self.assertEqual(nested, output)

    def test_multiply_json(self):
        """Тест произведения в JSON"""
        data = json.loads(call('multiply', '--alpha', '1', '--left', 'vv^^,v^v^', '--right', 'v^v^,vv^^',
                               '--format', 'json'))
        self.assertEqual(data['text'], 'x1 + x2')
        self.assertEqual([t['orientation'] for t in data['terms']], ['^v^v', 'v^v^'])

    def test_table_round_trip(self):
        """Тест: JSON таблицы читается обратно без изменений"""
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'table.json')
            call('table', '--n', '4', '--k', '2', '--alpha', '1', '--format', 'json', '--out', path)
            with open(path, encoding='utf-8') as handle:
                loaded = load_structure_table(json.load(handle))
        self.assertEqual(loaded, AlgebraService.structure_table(Shape(4, 2), 1))

    def test_table_text_is_deterministic(self):
        """Тест побайтового совпадения двух запусков"""
        args = ('table', '--n', '4', '--k', '2', '--alpha', '-1', '--basis', 'standard_only')
        first = call(*args)
        self.assertEqual(first, call(*args))
        self.assertTrue(first.startswith('shape (4,2) alpha -1 basis standard_only'))

    def test_k0(self):
        """Тест матрицы K0 при n = 2"""
        self.assertEqual(call('k0', '--n', '2', '--k', '1', '--format', 'csv'), 'w,^v,v^\n^v,1,0\nv^,-1,1\n')
        data = json.loads(call('k0', '--n', '2', '--k', '1', '--format', 'json'))
        self.assertEqual(data['entries'], [[1, 0], [-1, 1]])
        self.assertIn('det: 1', call('k0', '--n', '4', '--k', '2'))


class RunnerTestCase(SimpleTestCase):
    """Тесты кодов возврата"""

    def test_success(self):
        """Тест кода 0"""
        code, out, _ = run_captured('fixedpoints', '--n', '4', '--k', '2', '--a', 'v^v^', '--b', 'vv^^')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('count: 2'))

    def test_validation_errors(self):
        """Тест кода 1 с именем аргумента"""
        code, _, err = run_captured('fixedpoints', '--n', '4', '--k', '2', '--a', 'v^x^', '--b', 'vv^^')
        self.assertEqual(code, 1)
        self.assertIn('a:', err)
        code, _, err = run_captured('fixedpoints', '--n', '4', '--k', '2', '--a', 'v^v', '--b', 'vv^^')
        self.assertEqual(code, 1)
        self.assertIn('a:', err)
        code, _, err = run_captured('multiply', '--left', 'vv^^,v^v^', '--right', 'vv^^,v^v^')
        self.assertEqual(code, 1)
        self.assertIn('right', err)
        code, out, err = run_captured('cup', '--w', 'vv^')
        self.assertEqual(code, 1)
        self.assertEqual(out, '')
        self.assertIn('w:', err)

    def test_unknown_subcommand(self):
        """Тест неизвестной подкоманды и пустого вызова"""
        self.assertEqual(run_captured('plot')[0], 1)
        self.assertEqual(run_captured()[0], 1)

    def test_check_exit_codes(self):
        """Тест: проверка α = 1 проходит, при α = -1 печатается свидетель"""
        code, out, _ = run_captured('check', '--kind', 'associativity', '--n', '4', '--k', '2', '--alpha', '1')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'associativity (4,2) alpha 1: PASS\n')
        code, out, _ = run_captured('check', '--kind', 'associativity', '--n', '4', '--k', '2', '--alpha', '-1')
        self.assertEqual(code, 2)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'associativity (4,2) alpha -1: FAIL')
        self.assertEqual(len(json.loads('\n'.join(lines[1:]))['triple']), 3)

    def test_command_error_return_code(self):
        """Тест returncode у CommandError"""
        with self.assertRaises(CommandError) as caught:
            call('cup', '--w', 'v^?')
        self.assertEqual(caught.exception.returncode, 1)


class CheckRecordTestCase(TestCase):
    """Тесты сохранения запусков"""

    def test_record(self):
        """Тест --record"""
        call('checkalgebra', '--kind', 'unit', '--n', '2', '--k', '1', '--record')
        run = CheckRun.objects.get()
        self.assertEqual((run.kind, run.n, run.k, run.passed), ('unit', 2, 1, True))
