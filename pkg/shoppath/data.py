import os
import json
from shoppath.graphs import Graph
from shoppath.instances import Instance, shop_kinds
from shoppath.jobs import Job
from shoppath.schedules import Schedule, SolveResult
import shoppath.exceptions as ex

instance_keys = ('shop', 'm', 'vertices', 's', 't', 'arcs')
arc_keys = ('id', 'tail', 'head', 'ops')
result_keys = ('path', 'makespan', 'assignments')


def _loads(text):
    """Parse a JSON document into a dictionary"""
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')

        except UnicodeDecodeError as err:
            raise ex.DataMalformatted(f'Document is not valid UTF-8 at byte '
                                      f'{err.start}: {err.reason}')

    try:
        doc = json.loads(text)

    except json.JSONDecodeError as err:
        raise ex.DataMalformatted(f'Invalid JSON at line {err.lineno} column '
                                  f'{err.colno}: {err.msg}')

    if not isinstance(doc, dict):
        raise ex.DataMalformatted('Document must be a JSON object')

    return doc


def _dumps(doc):
    return (json.dumps(doc, indent=2) + '\n').encode('utf-8')


def _check_keys(doc, keys, where):
    """Every key must be present and no others"""

    if not isinstance(doc, dict):
        raise ex.DataMalformatted(f'{where or "Document"} must be an object')

    def name(key):
        return f'{where}.{key}' if where else key

    for key in doc:
        if key not in keys:
            raise ex.DataMalformatted(f'Unknown field {name(key)}')

    for key in keys:
        if key not in doc:
            raise ex.DataMalformatted(f'Missing field {name(key)}')

    return None


def _int(value, where, minimum=0):
    """Integer field (not a bool) no smaller than a minimum"""

    if isinstance(value, bool) or not isinstance(value, int):
        raise ex.DataMalformatted(f'{where} must be an integer, had {value!r}')

    if value < minimum:
        raise ex.DataMalformatted(f'{where} must be ≥ {minimum}, had '
                                  f'{value}')

    return value


def _list(value, where):
    if not isinstance(value, list):
        raise ex.DataMalformatted(f'{where} must be a list')
    return value


def _read_ops(ops, where, shop, m):
    """Operations of an arc's job. Zero duration operations an open shop
    job omits are added"""
    pairs = []

    for k, op in enumerate(_list(ops, where)):
        if not isinstance(op, list) or len(op) != 2:
            raise ex.DataMalformatted(f'{where}[{k}] must be [machine, '
                                      f'duration]')

        machine = _int(op[0], f'{where}[{k}].machine')
        if machine >= m:
            raise ex.DataMalformatted(f'{where}[{k}].machine = {machine} '
                                      f'must be < m = {m}')

        pairs.append((machine, _int(op[1], f'{where}[{k}].duration')))

    if shop == 'job':
        if len(pairs) == 0:
            raise ex.DataMalformatted(f'{where} is empty')
        return pairs

    durations = [0] * m
    for k, (machine, duration) in enumerate(pairs):
        if machine in [p[0] for p in pairs[:k]]:
            raise ex.DataMalformatted(f'{where}[{k}].machine = {machine} is '
                                      f'repeated in an open shop job')
        durations[machine] = duration

    return list(enumerate(durations))


def read_instance(text):
    """
    Instance from a JSON document:

    {"shop": "open" | "job", "m": 2, "vertices": 2, "s": 0, "t": 1,
     "arcs": [{"id": 0, "tail": 0, "head": 1, "ops": [[0, 3], [1, 2]]}]}

    :param text: (bytes | str)
    :return: (shoppath.instances.Instance)
    """
    doc = _loads(text)
    _check_keys(doc, instance_keys, where='')

    if doc['shop'] not in shop_kinds:
        raise ex.DataMalformatted(f'shop must be one of {shop_kinds}, had '
                                  f'{doc["shop"]!r}')

    m = _int(doc['m'], 'm', minimum=1)
    vertices = _int(doc['vertices'], 'vertices', minimum=1)

    arcs, jobs = [], []
    for i, arc in enumerate(_list(doc['arcs'], 'arcs')):
        where = f'arcs[{i}]'
        _check_keys(arc, arc_keys, where=where)

        arc_id = _int(arc['id'], f'{where}.id')
        arcs.append((arc_id,
                     _int(arc['tail'], f'{where}.tail'),
                     _int(arc['head'], f'{where}.head')))

        jobs.append(Job(arc_id, _read_ops(arc['ops'], f'{where}.ops',
                                          doc['shop'], m)))
    try:
        graph = Graph(vertices, arcs,
                      s=_int(doc['s'], 's'), t=_int(doc['t'], 't'))
        return Instance(doc['shop'], m, graph, jobs)

    except ex.InstanceNotValid as err:
        raise ex.DataMalformatted(f'Invalid instance: {err}')


def write_instance(instance):
    """
    JSON document of an instance. Open shop jobs are written with every
    operation, including those of zero duration

    :param instance: (shoppath.instances.Instance)
    :return: (bytes)
    """
    graph = instance.graph
    doc = {'shop': instance.shop_kind,
           'm': instance.m,
           'vertices': graph.vertex_count,
           's': graph.s,
           't': graph.t,
           'arcs': [{'id': arc_id, 'tail': tail, 'head': head,
                     'ops': [list(op) for op in instance.jobs[arc_id].ops]}
                    for arc_id, tail, head in graph.arcs]}

    return _dumps(doc)


def write_result(result):
    """
    JSON document of a solution:
    {"path": [arc ids], "makespan": int,
     "assignments": [[job, op, machine, start, duration], ..]}

    :param result: (shoppath.schedules.SolveResult)
    :return: (bytes)
    """
    doc = {'path': list(result.path),
           'makespan': result.makespan,
           'assignments': [list(a) for a in result.schedule]}

    return _dumps(doc)


def read_result(text):
    """
    Solution from a JSON document written by write_result. The declared
    makespan is kept, so it can be checked against the schedule

    :param text: (bytes | str)
    :return: (shoppath.schedules.SolveResult)
    """
    doc = _loads(text)
    _check_keys(doc, result_keys, where='')

    path = [_int(arc_id, f'path[{i}]')
            for i, arc_id in enumerate(_list(doc['path'], 'path'))]

    assignments = []
    for i, item in enumerate(_list(doc['assignments'], 'assignments')):
        if not isinstance(item, list) or len(item) != 5:
            raise ex.DataMalformatted(f'assignments[{i}] must be [job, op, '
                                      f'machine, start, duration]')

        assignments.append([_int(value, f'assignments[{i}][{k}]',
                                 minimum=-2**63)
                            for k, value in enumerate(item)])

    result = SolveResult(path, Schedule(assignments), algorithm='file')
    result.makespan = _int(doc['makespan'], 'makespan')
    return result


def _read_file(filename):
    if not os.path.exists(filename):
        raise ex.ShopPathCritical(f'File {filename} does not exist')

    with open(filename, 'rb') as in_file:
        return in_file.read()


def _write_file(content, filename):
    with open(filename, 'wb') as out_file:
        out_file.write(content)

    return None


def load_instance(filename):
    """Instance from a .json file"""
    return read_instance(_read_file(filename))


def save_instance(instance, filename):
    """Write an instance to a .json file"""
    return _write_file(write_instance(instance), filename)


def load_result(filename):
    """Solution from a .json file"""
    return read_result(_read_file(filename))


def save_result(result, filename):
    """Write a solution to a .json file"""
    return _write_file(write_result(result), filename)
