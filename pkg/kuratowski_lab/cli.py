"""
Command-line entry point: ``kuratowski-lab <command> [options]``.

Reports go to stdout (or ``--out``), logs to stderr. Exit status is 0 on success, 1 when a
verification or expectation fails and 2 on invalid input.
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import chittenden, collapses, diagrams, kuratowski, locales, pseudo
from .catalogs import expected_collapse_count, expected_irreducibles, load_catalog, load_fig5, set_data_dir
from .config import get_logger, setup_logging
from .config_loader import LabConfig, load_lab_config
from .context import log_context
from .errors import CapExceeded, InputError, LabError
from .posets import check_map, poset_from_json
from .reports import dot_graph, dump_json

logger = get_logger(__name__)

FORMATS = ('json', 'text', 'dot')
FIGURES = ('fig2', 'fig3', 'fig4', 'fig5', 'fig6', 'table1', 'fig7')


class Result:
    """A command's report plus whether it counts as success."""

    def __init__(self, report: Any, ok: bool = True, text: Optional[str] = None, dot: Optional[str] = None):
        self.report = report
        self.ok = ok
        self.text = text
        self.dot = dot


def _params(args: argparse.Namespace) -> chittenden.Params:
    return chittenden.Params(args.m, args.n)


def _cap(value: int, cap: int, name: str) -> int:
    if value > cap:
        raise CapExceeded(f'{name}={value} exceeds the configured cap {cap}', **{name: value, 'cap': cap})
    return value


def _read_json(path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f'cannot read {path}: {e}', path=path) from e


# Word commands


def cmd_nf(args: argparse.Namespace, config: LabConfig) -> Result:
    if args.m > args.n:
        swapped = chittenden.Params(args.n, args.m)
        form = chittenden.negate(chittenden.normal_form(chittenden.negate(args.word), swapped))
    else:
        form = chittenden.normal_form(args.word, _params(args))
    return Result({'params': f'{args.m},{args.n}', 'word': args.word, 'normal_form': form}, text=form)


def cmd_mul(args: argparse.Namespace, config: LabConfig) -> Result:
    product = chittenden.multiply(args.a, args.b, _params(args))
    return Result({'params': _params(args).key(), 'a': args.a, 'b': args.b, 'product': product}, text=product)


def cmd_order(args: argparse.Namespace, config: LabConfig) -> Result:
    p = _params(args)
    words = chittenden.wset(p)
    covers = [[words[a], words[b]] for a, b in chittenden.order_poset(p).covers]
    text = '\n'.join(f'{lo} < {hi}' for lo, hi in covers)
    return Result({'params': p.key(), 'words': list(words), 'covers': covers}, text=text)


def cmd_hasse(args: argparse.Namespace, config: LabConfig) -> Result:
    if args.catalog:
        d = load_catalog(args.catalog)
    else:
        d = chittenden.hasse(_params(args))
    styles = {(lo, hi): style for lo, hi, style in d.edges}
    dot = dot_graph(d.nodes, [(lo, hi) for lo, hi, _ in d.edges], name=d.name, styles=styles)
    report = {'name': d.name, 'nodes': list(d.nodes), 'edges': [list(e) for e in d.edges]}
    return Result(report, text=dot, dot=dot)


# Searches


def cmd_classify(args: argparse.Namespace, config: LabConfig) -> Result:
    if args.instance:
        data = _read_json(args.instance)
        missing = [key for key in ('poset', 'c', 'i') if not isinstance(data, dict) or key not in data]
        if missing:
            raise InputError(f'instance {args.instance} lacks {", ".join(missing)}', missing=missing)
        p = poset_from_json(data['poset'])
        c = check_map(data['c'], p.size)
        i = check_map(data['i'], p.size)
        found = kuratowski.classify(p, c, i)
        return Result(found.to_dict(), text=found.name)
    max_points = _cap(args.max_points or config.max_points, config.max_points, 'max_points')
    report = kuratowski.realize_labels(max_points, jobs=args.jobs or config.jobs)
    text = '\n'.join(f'{name}: {size} points' for name, size in report['minimal_sizes'].items())
    return Result(report, ok=not report['missing'], text=text)


def cmd_search(args: argparse.Namespace, config: LabConfig) -> Result:
    p = _params(args)
    max_points = _cap(args.max_points or config.max_points, config.max_points, 'max_points')
    report = collapses.search_collapses(
        p,
        max_points,
        mode=args.mode,
        floor=args.floor,
        jobs=args.jobs or config.jobs,
        max_instances=args.max_instances,
    )
    ok = True
    if args.expect_count is not None and report['count'] != args.expect_count:
        logger.error(f'{report["count"]} collapses found, expected {args.expect_count}')
        ok = False
    text = f'{p}: {report["count"]} collapses on at most {report["searched_points"]} points'
    return Result(report, ok=ok, text=text)


def cmd_pseudo(args: argparse.Namespace, config: LabConfig) -> Result:
    max_points = _cap(args.max_points, config.max_points, 'max_points')
    jobs = args.jobs or config.jobs
    if args.action == 'verify':
        report = pseudo.verify_all(max_points, jobs=jobs)
        ok = report['verified']
    elif args.action == 'dashed':
        report = pseudo.search_dashed_counterexamples(max_points, max_instances=args.max_instances)
        ok = report['complete']
    else:
        report = pseudo.implication_redundancy_check(max_points, jobs=jobs)
        ok = report['complete']
    return Result(report, ok=ok)


def cmd_locale(args: argparse.Namespace, config: LabConfig) -> Result:
    if args.frame:
        frames = [locales.check_frame(poset_from_json(_read_json(args.frame)))]
    else:
        frames = locales.enumerate_frames(_cap(args.max_size, config.frame_cap, 'frame_cap'))
    for f in frames:
        _cap(f.size, config.frame_cap, 'frame_cap')
    reports = [locales.check_localic_laws(f) for f in frames]
    report = {
        'frames': reports,
        'largest_monoid': max(r['monoid_size'] for r in reports),
        'verified': all(r['verified'] for r in reports),
    }
    text = '\n'.join(
        f'frame of {r["frame_size"]}: {r["nuclei"]} nuclei, monoid {r["monoid_size"]}, verified={r["verified"]}'
        for r in reports
    )
    return Result(report, ok=report['verified'], text=text)


# Catalog verification


def _verify_diagram(name: str) -> Dict[str, Any]:
    d = load_catalog(name)
    join, meet = expected_irreducibles(name)
    if join is None:
        return {'catalog': name, 'covers': len(d.poset.covers), 'verified': True}
    report = diagrams.verify_catalog(d, expected_join=join, expected_meet=meet)
    heuristic_ok = diagrams.heuristic_join_irreducibles(d) == join and diagrams.heuristic_meet_irreducibles(d) == meet
    report['heuristic_agrees'] = heuristic_ok
    return report


def _verify_figure(args: argparse.Namespace, config: LabConfig) -> Dict[str, Any]:
    jobs = args.jobs or config.jobs
    figure = args.figure
    if figure == 'fig2':
        return _verify_diagram('fig2')
    if figure == 'fig3':
        upper, lower = _verify_diagram('fig3_upper'), _verify_diagram('fig3_lower')
        return {'upper': upper, 'lower': lower, 'verified': upper['verified'] and lower['verified']}
    if figure == 'fig4':
        max_points = _cap(args.max_points or 5, config.max_points, 'max_points')
        report = collapses.order_convergence(_params(args), max_points, jobs=jobs)
        report['verified'] = report['converged']
        return report
    if figure == 'fig5':
        panels = []
        for (m, n), edges in sorted(load_fig5().items()):
            p = chittenden.Params(m, n)
            words = chittenden.wset(p)
            computed = {(words[a], words[b]) for a, b in chittenden.order_poset(p).covers}
            panels.append(
                {
                    'params': p.key(),
                    'missing': sorted(edges - computed),
                    'unexpected': sorted(computed - edges),
                }
            )
        return {'panels': panels, 'verified': not any(e['missing'] or e['unexpected'] for e in panels)}
    if figure in ('fig6', 'table1'):
        catalog = collapses.load_class_catalog()
        max_points = _cap(args.max_points or 3, config.max_points, 'max_points')
        sweep = collapses.coherence_sweep(max_points, catalog, jobs=jobs)
        kinds = ('table-cell',) if figure == 'table1' else ('class-split', 'arrow')
        failures = [
            {'instance': f['instance'], 'problems': [x for x in f['problems'] if x['kind'] in kinds]}
            for f in sweep['failures']
        ]
        failures = [f for f in failures if f['problems']]
        return {
            'classes': len(catalog.classes),
            'arrows': len(catalog.arrows),
            'cells': len(catalog.cells),
            'instances': sweep['instances'],
            'failures': failures,
            'verified': not failures,
        }
    nodes = collapses.catalog_nodes()
    distinct = len({node.collapse for node in nodes})
    counts = {}
    for m, n in ((2, 2), (2, 3), (3, 3)):
        found = collapses.catalog_collapses(chittenden.Params(m, n)) or []
        counts[f'{m},{n}'] = {'catalog': len(found), 'expected': expected_collapse_count(m, n)}
    flags_ok = all(node.c22 == collapses.c22_compatible(node.collapse) for node in nodes)
    congruences = all(node.collapse.is_congruence() for node in nodes)
    return {
        'nodes': len(nodes),
        'distinct': distinct,
        'counts': counts,
        'c22_flags_agree': flags_ok,
        'all_congruences': congruences,
        'verified': distinct == len(nodes)
        and flags_ok
        and congruences
        and all(c['catalog'] == c['expected'] for c in counts.values()),
    }


def cmd_verify(args: argparse.Namespace, config: LabConfig) -> Result:
    report = _verify_figure(args, config)
    return Result(report, ok=report['verified'], text=f'{args.figure}: verified={report["verified"]}')


COMMANDS: Dict[str, Callable[[argparse.Namespace, LabConfig], Result]] = {
    'nf': cmd_nf,
    'mul': cmd_mul,
    'order': cmd_order,
    'hasse': cmd_hasse,
    'classify-kuratowski': cmd_classify,
    'search-collapses': cmd_search,
    'pseudo': cmd_pseudo,
    'locale': cmd_locale,
    'verify': cmd_verify,
}


def _add_params(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument('--m', type=int, required=required, default=2)
    parser.add_argument('--n', type=int, required=required, default=3)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='kuratowski-lab', description='Operator semigroups on finite posets.')
    parser.add_argument('--config', metavar='PATH', help='JSON config file')
    parser.add_argument('--log-level', help='DEBUG, INFO, WARNING or ERROR')
    parser.add_argument('--log-format', default='default', help='default, compact, verbose or a format string')
    parser.add_argument('--format', choices=FORMATS, default='json', dest='output_format')
    parser.add_argument('--out', metavar='PATH', help='write the report here instead of stdout')
    parser.add_argument('--jobs', type=int, default=None, help='worker processes for searches')
    parser.add_argument('--seed', type=int, default=None, help='recorded in the log context; searches are deterministic')
    sub = parser.add_subparsers(dest='command', required=True)

    nf = sub.add_parser('nf', help='normal form of a word in C(m,n)')
    _add_params(nf)
    nf.add_argument('word')

    mul = sub.add_parser('mul', help='product of two normal forms')
    _add_params(mul)
    mul.add_argument('a')
    mul.add_argument('b')

    order = sub.add_parser('order', help='covering pairs of the general order')
    _add_params(order)

    hasse = sub.add_parser('hasse', help='Hasse diagram of C(m,n) or of a checked-in catalog')
    _add_params(hasse, required=False)
    hasse.add_argument('--catalog', choices=('fig2', 'fig3_upper', 'fig3_lower'))

    classify = sub.add_parser('classify-kuratowski', help='label one instance or realise all labels')
    group = classify.add_mutually_exclusive_group(required=True)
    group.add_argument('--instance', metavar='FILE', help='JSON with poset, c and i')
    group.add_argument('--realize', action='store_true')
    classify.add_argument('--max-points', type=int)

    search = sub.add_parser('search-collapses', help='collapses of C(m,n) realised on small posets')
    _add_params(search)
    search.add_argument('--max-points', type=int)
    search.add_argument('--mode', choices=('exhaustive', 'witness'), default='exhaustive')
    search.add_argument('--floor', type=int, default=5)
    search.add_argument('--max-instances', type=int)
    search.add_argument('--expect-count', type=int)

    ps = sub.add_parser('pseudo', help='interior and pseudocomplement monoid checks')
    ps.add_argument('action', choices=('verify', 'dashed', 'redundancy'))
    ps.add_argument('--max-points', type=int, default=4)
    ps.add_argument('--max-instances', type=int)

    locale = sub.add_parser('locale', help='sublocale operators on finite frames')
    locale.add_argument('action', choices=('demo',))
    locale.add_argument('--frame', metavar='FILE', help='JSON poset of a finite distributive lattice')
    locale.add_argument('--max-size', type=int, default=6)

    verify = sub.add_parser('verify', help='check a transcribed figure or table')
    verify.add_argument('figure', choices=FIGURES)
    _add_params(verify, required=False)
    verify.add_argument('--max-points', type=int)
    return parser


def _render(result: Result, fmt: str) -> str:
    if fmt == 'json':
        return dump_json(result.report) + '\n'
    if fmt == 'dot':
        if result.dot is None:
            raise InputError('this command has no DOT rendering')
        return result.dot
    return (result.text if result.text is not None else dump_json(result.report)) + '\n'


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_lab_config(args.config)
        if args.jobs is not None:
            config.jobs = args.jobs
        config.validate()
        setup_logging(log_level=args.log_level, console_format=args.log_format, config=config)
        if config.data_dir:
            set_data_dir(config.data_dir)
        with log_context(command=args.command, seed=args.seed):
            result = COMMANDS[args.command](args, config)
        _emit(_render(result, args.output_format), args.out)
        return 0 if result.ok else 1
    except LabError as e:
        logger.error(f'{type(e).__name__}: {e.message}')
        if args.output_format == 'json':
            _emit(dump_json(e.to_dict()) + '\n', args.out)
        return e.exit_code


def run(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))
