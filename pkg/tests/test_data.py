from shoppath.algorithms import solve
from shoppath.data import (read_instance, write_instance, read_result,
                           write_result, load_instance, save_instance,
                           load_result, save_result)
from shoppath.generate import generate_random
from shoppath.schedules import validate_result
from shoppath.exceptions import DataMalformatted, ShopPathCritical
import pytest
import json
import os

here = os.path.abspath(os.path.dirname(__file__))


def instance_doc(**kwargs):
    doc = {'shop': 'open', 'm': 2, 'vertices': 2, 's': 0, 't': 1,
           'arcs': [{'id': 0, 'tail': 0, 'head': 1, 'ops': [[1, 4]]}]}
    doc.update(kwargs)
    return json.dumps(doc)


def test_read_instance():
    instance = read_instance(instance_doc())

    assert instance.m == 2
    assert instance.n == 1
    assert instance.is_open

    # Missing open shop operations have zero duration
    assert instance.jobs[0].ops == ((0, 0), (1, 4))


def test_read_job_instance():
    doc = instance_doc(shop='job', arcs=[{'id': 0, 'tail': 0, 'head': 1,
                                          'ops': [[1, 4], [0, 2], [1, 1]]}])
    instance = read_instance(doc.encode('utf-8'))

    assert not instance.is_open
    assert instance.jobs[0].ops == ((1, 4), (0, 2), (1, 1))


def test_write_instance():
    instance = generate_random(7, 14, m=3, shop='job', seed=2)
    text = write_instance(instance)

    assert isinstance(text, bytes)
    assert text.endswith(b'\n')
    assert read_instance(text) == instance


def test_read_instance_invalid():

    with pytest.raises(DataMalformatted) as err:
        _ = read_instance(instance_doc(arcs=[{'id': 0, 'tail': 0, 'head': 1,
                                              'ops': [[2, 4]]}]))
    assert 'arcs[0].ops[0].machine' in str(err.value)

    with pytest.raises(DataMalformatted) as err:
        _ = read_instance(instance_doc(colour='red'))
    assert 'colour' in str(err.value)

    with pytest.raises(DataMalformatted) as err:
        _ = read_instance('{"shop": "open",\n "m": }')
    assert 'line 2' in str(err.value)

    with pytest.raises(DataMalformatted) as err:
        _ = read_instance(b'\xff\xfe{}')
    assert 'UTF-8' in str(err.value)

    bad_docs = [instance_doc(shop='flow'),
                instance_doc(m=0),
                instance_doc(m=True),
                instance_doc(s=1),
                instance_doc(t=5),
                instance_doc(arcs=[{'id': 0, 'tail': 0, 'head': 1,
                                    'ops': [[0, -1]]}]),
                instance_doc(arcs=[{'id': 0, 'tail': 0, 'head': 1,
                                    'ops': [[0, 1], [0, 2]]}]),
                instance_doc(arcs=[{'id': 1, 'tail': 0, 'head': 1,
                                    'ops': [[0, 1]]}]),
                instance_doc(shop='job', arcs=[{'id': 0, 'tail': 0,
                                                'head': 1, 'ops': []}]),
                '[1, 2, 3]']

    for doc in bad_docs:
        with pytest.raises(DataMalformatted):
            _ = read_instance(doc)


def test_result():
    instance = load_instance(os.path.join(here, 'instance_data',
                                          'o2_parallel.json'))
    result = solve(instance, 'sd')

    read = read_result(write_result(result))
    assert read == result
    assert read.algorithm == 'file'
    assert validate_result(instance, read).ok


def test_result_invalid():

    with pytest.raises(DataMalformatted):
        _ = read_result('{"path": [0], "makespan": 5}')

    with pytest.raises(DataMalformatted):
        _ = read_result('{"path": [0], "makespan": 5, '
                        '"assignments": [[0, 0, 0, 0]]}')

    # A declared makespan that disagrees with the schedule is kept
    result = read_result('{"path": [0], "makespan": 4, '
                         '"assignments": [[0, 0, 0, 0, 5]]}')
    assert result.makespan == 4
    assert result.schedule.makespan == 5


def test_files(tmp_path):

    with pytest.raises(ShopPathCritical):
        _ = load_instance('a_filename_that_doesnt_exist.json')

    instance = generate_random(5, 8, m=2, seed=0)
    filename = str(tmp_path / 'instance.json')
    save_instance(instance, filename)
    assert load_instance(filename) == instance

    result = solve(instance, 'sd')
    filename = str(tmp_path / 'result.json')
    save_result(result, filename)
    assert load_result(filename) == result


def test_golden_instances():
    instance = load_instance(os.path.join(here, 'instance_data',
                                          'o2_parallel.json'))
    result = solve(instance, 'sd')

    assert result.path == (0,)
    assert result.makespan == 5

    instance = load_instance(os.path.join(here, 'instance_data',
                                          'j2_jackson.json'))
    result = solve(instance, 'jjar')

    assert result.path == (0, 1)
    assert result.makespan == 5
