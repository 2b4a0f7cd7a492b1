from shoppath.cli import main
from shoppath.data import load_instance, load_result
import json
import os

here = os.path.abspath(os.path.dirname(__file__))


def data_path(filename):
    return os.path.join(here, 'instance_data', filename)


def test_gen_random(tmp_path):
    filename = str(tmp_path / 'instance.json')

    assert main(['gen', 'random', '--seed', '3', '--vertices', '6',
                 '--arcs', '9', '--m', '3', '--shop', 'job',
                 '--out', filename]) == 0

    instance = load_instance(filename)
    assert instance.n == 9
    assert instance.m == 3
    assert not instance.is_open


def test_solve_and_verify(tmp_path):
    filename = str(tmp_path / 'result.json')

    assert main(['solve', '--alg', 'sd', '--in', data_path('o2_parallel.json'),
                 '--out', filename]) == 0

    result = load_result(filename)
    assert result.path == (0,)
    assert result.makespan == 5

    assert main(['verify', '--in', data_path('o2_parallel.json'),
                 '--sched', filename]) == 0


def test_solve_stdout(capsys):

    assert main(['solve', '--alg', 'gar', '--eps', '1/8',
                 '--in', data_path('o2_parallel.json')]) == 0

    doc = json.loads(capsys.readouterr().out)
    assert doc['path'] == [0]
    assert doc['makespan'] == 5


def test_verify_invalid(tmp_path, capsys):
    filename = str(tmp_path / 'result.json')

    # Declared makespan is one short
    with open(filename, 'w') as result_file:
        print('{"path": [0], "makespan": 4, '
              '"assignments": [[0, 0, 0, 0, 5], [0, 1, 1, 0, 0]]}',
              file=result_file)

    assert main(['verify', '--in', data_path('o2_parallel.json'),
                 '--sched', filename]) == 1
    assert 'makespan' in capsys.readouterr().out


def test_errors(capsys):

    assert main(['solve', '--alg', 'sd',
                 '--in', 'a_filename_that_doesnt_exist.json']) == 2
    assert 'ShopPathCritical' in capsys.readouterr().err

    # Jackson's rule on an open shop
    assert main(['solve', '--alg', 'jjar',
                 '--in', data_path('o2_parallel.json')]) == 2
    assert 'SchedulerNotApplicable' in capsys.readouterr().err


def test_gen_3dm(tmp_path):
    filename = str(tmp_path / 'instance.json')

    assert main(['gen', '3dm', '--n', '2', '--triples',
                 data_path('triples.txt'), '--out', filename]) == 0

    instance = load_instance(filename)
    assert instance.m == 6
    assert instance.n == 6

    # Triple (1, 1, 1) is out of range for n = 1
    assert main(['gen', '3dm', '--n', '1', '--triples',
                 data_path('triples.txt')]) == 2


def test_bench(tmp_path):
    prefix = str(tmp_path / 'report')

    assert main(['bench', '--suite', data_path('suite.json'),
                 '--out', prefix]) == 0

    assert os.path.exists(f'{prefix}.tsv')

    with open(f'{prefix}.json', 'r') as report_file:
        doc = json.load(report_file)

    assert doc['exit_code'] == 0
    assert len(doc['rows']) == 25


def test_not_utf8(tmp_path, capsys):
    filename = str(tmp_path / 'instance.json')

    with open(filename, 'wb') as instance_file:
        instance_file.write(b'\xff\xfe{}')

    assert main(['solve', '--alg', 'sd', '--in', filename]) == 2
    assert 'UTF-8' in capsys.readouterr().err


def test_sae_subset_flags(capsys):
    args = ['solve', '--alg', 'sae', '--eps', '3',
            '--in', data_path('o2_parallel.json')]

    for flag in ('--guaranteed-n', '--paper-n'):
        assert main(args + [flag]) == 0

        doc = json.loads(capsys.readouterr().out)
        assert doc['makespan'] == 5
