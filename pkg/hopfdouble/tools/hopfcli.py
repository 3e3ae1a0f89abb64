#!/usr/bin/env python3
"""
hopfdouble command line.

  hopfdouble catalog {export,verify} NAME [--perturb tensor:i,j,k:delta]
  hopfdouble modules {list,certify,ext-table,quiver} [--format dot|json]
  hopfdouble yd {braiding,verify-tables} [--module NAME]
  hopfdouble nichols --module NAME [--maxdeg N] [--relations]
  hopfdouble bosonize --module NAME [--verify-presentation] [--export PATH]
  hopfdouble full-report

Exit codes: 0 when every check passes, 1 on a failed verification, 2 on usage errors.
"""
import argparse
from collections import OrderedDict
import itertools
import json
import logging as log
import sys
import traceback

from hopfdouble.config import hopf_config
from hopfdouble.config.hopf_args import add_hopf_args, parse_hopf_args
from hopfdouble.lib import bosonization, catalog, common, hopfcore, nichols, repmod, ydcat
from hopfdouble.lib.errors import HopfError, UnknownName
from hopfdouble.lib.scalars import as_scalar
from hopfdouble.lib.util import linalg
from hopfdouble.lib.util.TaskPool import run_tasks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FINITE_NICHOLS = ('V_{3,1}', 'V_{3,5}', 'V_{2,2}', 'V_{2,4}')


class UsageError(Exception):
    pass


class Session:
    """ Lazily built objects shared by the commands of one run """
    def __init__(self, args):
        self.args = args
        self.cache = common.JsonCache(args.cache_dir, args.theta_sign, args.schema_version, args.use_cache)
        self._hopf = {}
        self._algebra = None
        self._tables = None
        self._yds = None
        self._suite = None

    @property
    def full_check_max_dim(self):
        return self.args.verify.full_check_max_dim

    @property
    def tables(self):
        if self._tables is None:
            self._tables = hopf_config.load_printed_tables(self.args.tables_file)
        return self._tables

    def cached_hopf(self, name):
        """Cache entry for name, returned only after verify_hopf passes on it again"""
        data = self.cache.get(name)
        if data is None:
            return None
        H = hopfcore.from_json(data)
        if not hopfcore.verify_hopf(H, 'hopf', self.full_check_max_dim).passed:
            log.warning('Cache entry %s fails verification, rebuilding' % self.cache.path(name))
            return None
        return H

    def hopf(self, name):
        if name not in self._hopf:
            H = self.cached_hopf(name)
            if H is None:
                H = catalog.build(name, self.args.theta_sign, self.full_check_max_dim)
                self.cache.put(name, hopfcore.to_json(H))
            self._hopf[name] = H
        return self._hopf[name]

    @property
    def algebra(self):
        if self._algebra is None:
            theta_sign = self.args.theta_sign
            C = self.hopf('C')
            D = self.cached_hopf('D')
            embedding = None
            if D is not None:
                presentation = catalog.d_presentation(theta_sign)
                embedding = catalog.GeneratorEmbedding(D, presentation, D.generators)
                if not embedding.verify().passed:
                    log.warning('Cached double does not satisfy its presentation, rebuilding')
                    embedding = None
            if embedding is not None:
                self._algebra = repmod.DoubleAlgebra(D, presentation, embedding, theta_sign, C)
            else:
                with common.timed('double'):
                    self._algebra = repmod.DoubleAlgebra.build(theta_sign, C, self.full_check_max_dim)
                self.cache.put('D', hopfcore.to_json(self._algebra.D))
        return self._algebra

    @property
    def yds(self):
        if self._yds is None:
            with common.timed('yd catalog'):
                self._yds = ydcat.yd_catalog(self.algebra, self.args.threads)
        return self._yds

    @property
    def suite(self):
        if self._suite is None:
            self._suite = bosonization.BosonizationSuite(self.algebra, self.tables, self.full_check_max_dim)
        return self._suite

    def yd_module(self, name):
        M = repmod.module_by_name(name, self.algebra)
        if self._yds is not None and M.name in self._yds:
            return self._yds[M.name]
        return ydcat.to_yd(M)

    def nichols_options(self):
        opts = self.args.nichols
        return dict(maxdeg=opts.maxdeg, memory_budget_mb=opts.memory_budget_mb,
                    bytes_per_entry=opts.bytes_per_entry, extra_zero_degrees=opts.extra_zero_degrees)


def emit(args, obj):
    obj = OrderedDict(obj)
    obj['schema_version'] = args.schema_version
    if args.out:
        common.write_json(args.out, obj)
        log.info('Wrote %s' % args.out)
    else:
        print(json.dumps(obj, indent=1, ensure_ascii=False))


def manifest(args, steps):
    return OrderedDict([
        ('command', args.command),
        ('config', OrderedDict([('theta_sign', args.theta_sign), ('maxdeg', args.nichols.maxdeg),
                                ('memory_budget_mb', args.nichols.memory_budget_mb)])),
        ('steps', OrderedDict((name, 'pass' if ok else 'fail') for name, ok in steps.items())),
    ])


def parse_perturbation(spec):
    """'mult:0,0,0:+1' -> ('mult', [0, 0, 0], '+1')"""
    try:
        tensor, index, delta = spec.split(':')
        index = [int(t) for t in index.split(',')]
        as_scalar(delta)
    except ValueError:
        raise UsageError('Bad perturbation %r, expected tensor:i,j,k:delta' % spec)
    if tensor not in ('mult', 'comult', 'antipode'):
        raise UsageError('Unknown structure tensor %s' % tensor)
    return tensor, index, delta


# Commands

def cmd_catalog(session, args):
    H = session.hopf(args.name)
    if args.get('perturb'):
        tensor, index, delta = parse_perturbation(args.perturb)
        H = hopfcore.perturbed(H, tensor, index, delta)
    if args.action == 'export':
        emit(args, hopfcore.to_json(H))
        return EXIT_OK
    report = hopfcore.verify_hopf(H, 'hopf', session.full_check_max_dim)
    out = OrderedDict(report.to_json())
    if report.passed and H.dim <= session.full_check_max_dim:
        out['grouplikes'] = len(hopfcore.grouplikes(H))
    emit(args, out)
    return EXIT_OK if report.passed else EXIT_FAILED


def simple_census(algebra):
    simples = repmod.simple_catalog(algebra)
    report = hopfcore.AxiomReport('simple modules', 'full')
    report.add('36 simple modules', len(simples) == 36, None, len(simples))
    not_simple = [name for name, M in simples.items() if not repmod.is_simple(M)]
    report.add('all simple', not not_simple, tuple(not_simple) or None)
    iso = [(a, b) for a, b in itertools.combinations(simples, 2) if repmod.hom_space(simples[a], simples[b])]
    report.add('pairwise non-isomorphic', not iso, tuple(iso[:1]) or None)
    total = sum(M.dim ** 2 for M in simples.values())
    report.add('sum of squared dimensions is 126', total == 126, None, total)
    report.add('six characters', len(repmod.one_dim_solutions(algebra)) == 6)
    return simples, report


def tensor_dual_laws(algebra, threads=1):
    """V_{i,j} (x) K_chi^k = V_{i+k,j+3k} and V_{i,j}* = V_{-i-1,-j-3}"""
    characters = repmod.character_modules(algebra)
    simples = repmod.two_dim_simples(algebra)
    report = hopfcore.AxiomReport('tensor and dual laws', 'isomorphism')
    pairs = [(ij, k) for ij in simples for k in range(6)]

    def tensor_iso(pair):
        (i, j), k = pair
        M = repmod.tensor_module(simples[(i, j)], characters[k])
        return repmod.is_isomorphic(M, simples[((i + k) % 6, (j + 3 * k) % 6)]).verdict
    verdicts = run_tasks(tensor_iso, pairs, threads)
    bad = [p for p, v in zip(pairs, verdicts) if v != 'yes']
    report.add('tensor with characters', not bad, tuple(bad[:1]) or None)

    def dual_iso(ij):
        return repmod.is_isomorphic(repmod.dual_module(simples[ij]),
                                    simples[repmod.dual_simple_index(*ij)]).verdict
    verdicts = run_tasks(dual_iso, list(simples), threads)
    bad = [ij for ij, v in zip(simples, verdicts) if v != 'yes']
    report.add('duals', not bad, tuple(bad[:1]) or None)
    return report


def cmd_modules(session, args):
    algebra = session.algebra
    if args.action == 'list':
        modules = list(repmod.simple_catalog(algebra).values()) + repmod.projective_modules(algebra)
        emit(args, {'modules': [{'name': M.name, 'dim': M.dim} for M in modules]})
        return EXIT_OK
    if args.action == 'certify':
        simples, report = simple_census(algebra)
        report.merge(tensor_dual_laws(algebra, args.threads))
        out = OrderedDict(report.to_json())
        if args.check_tables:
            printed = repmod.printed_projective_check(algebra, session.tables['printed_modules']['P'])
            out['errata'] = printed.to_json()
        emit(args, out)
        return EXIT_OK if report.passed else EXIT_FAILED
    simples = repmod.simple_catalog(algebra)
    if args.action == 'ext-table':
        table = repmod.ext_table(simples, args.threads)
        names = list(simples)
        emit(args, {'simples': names, 'dims': [[table[(s, t)] for t in names] for s in names]})
        return EXIT_OK
    quiver = repmod.ext_quiver_and_type(simples, threads=args.threads)
    if args.format == 'dot':
        text = quiver.to_dot()
        if args.out:
            with open(args.out, 'w', encoding='utf-8') as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    else:
        emit(args, quiver.to_json())
    return EXIT_OK


def cmd_yd(session, args):
    if args.action == 'braiding':
        if not args.module:
            raise UsageError('yd braiding needs --module')
        V = session.yd_module(args.module)
        c = ydcat.braiding_of(V)
        emit(args, {'module': V.to_json(), 'braiding': c.to_json()})
        return EXIT_OK
    algebra = session.algebra
    report = hopfcore.AxiomReport('YD modules', 'full')
    for name, V in session.yds.items():
        report.merge(ydcat.yd_report(V), prefix='%s: ' % name)
        report.add('%s: braid relation' % name, ydcat.braiding_of(V).braid_relation_holds())
    coactions = ydcat.verify_printed_coactions(algebra, session.tables, session.yds)
    braidings = ydcat.verify_printed_braidings(algebra, session.tables, session.yds)
    emit(args, OrderedDict([
        ('yd', report.to_json()),
        ('errata', [e.axiom for e in coactions.failed() + braidings.failed()]),
        ('printed_coactions', coactions.to_json()),
        ('printed_braidings', braidings.to_json()),
    ]))
    return EXIT_OK if report.passed else EXIT_FAILED


def _presentation_for(tables, module_name):
    for key, entry in tables['nichols_presentations'].items():
        if entry['module'] == module_name:
            return key, entry
    return None, None


def cmd_nichols(session, args):
    V = session.yd_module(args.module)
    c = ydcat.braiding_of(V)
    report = nichols.nichols_ranks(c, relations=args.relations, **session.nichols_options())
    out = OrderedDict(report.to_json())
    ok = True
    if args.check_tables:
        key, entry = _presentation_for(session.tables, V.name)
        if entry is not None:
            p = nichols.PresentedBraidedAlgebra.from_table(key, entry, session.algebra.constants)
            check = nichols.check_presentation(p, c)
            out['presentation'] = check.to_json()
            ok = check.passed
    emit(args, out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_bosonize(session, args):
    suite = session.suite
    H = suite.biproduct(args.module)
    data = suite.data(args.module)
    out = OrderedDict([
        ('name', H.name),
        ('dim', H.dim),
        ('dim_R', data.dim),
        ('hopf', H.report.to_json()),
        ('yd_structure', data.module_algebra_report().to_json()),
        ('coinvariants', len(bosonization.coinvariants(H))),
        ('coradical', bosonization.coradical_report(H)),
    ])
    ok = H.report.passed and out['coinvariants'] == data.dim
    if args.verify_presentation:
        report = suite.verify_presentation(args.module)
        out['presentation'] = report.to_json()
        ok = ok and report.passed
    if args.export:
        common.write_json(args.export, hopfcore.to_json(H))
        log.info('Exported %s to %s' % (H.name, args.export))
    emit(args, out)
    return EXIT_OK if ok else EXIT_FAILED


# Full report

class Claims:
    """ Named claims with pass / fail / skipped and details """
    def __init__(self):
        self.items = OrderedDict()

    def add(self, name, passed, detail=None):
        self.items[name] = OrderedDict([('passed', passed), ('detail', detail)])
        if passed is False:
            log.warning('Claim %s fails' % name)
        return passed

    def failed(self):
        return [name for name, c in self.items.items() if c['passed'] is False]

    def to_json(self):
        return self.items


def full_report(session, args):
    claims = Claims()
    errata = []
    results = OrderedDict()
    algebra_names = ('A0', 'A1', 'B0', 'B1', 'C')

    with common.timed('catalog'):
        for name in algebra_names:
            report = hopfcore.verify_hopf(session.hopf(name), 'hopf', session.full_check_max_dim)
            claims.add('hopf_axioms_%s' % name, report.passed)
        C = session.hopf('C')
        claims.add('grouplikes_C', len(hopfcore.grouplikes(C)) == 2)
        claims.add('grouplikes_C_dual', len(hopfcore.grouplikes(hopfcore.dual_hopf(C))) == 6)
        claims.add('phi_A1_to_C_dual', catalog.phi_iso(args.theta_sign, session.hopf('A1'), C).report.passed)
        claims.add('comatrix_relations', catalog.verify_comatrix_relations(args.theta_sign).passed)
        results['antipode_order_C'] = hopfcore.antipode_order(C)
        results['coradical_C'] = len(hopfcore.coradical(C))
        diff = catalog.dual_table_diff(session.tables, args.theta_sign, C)
        errata.extend({'table': 'dual coproducts', 'detail': row} for row in diff)

    with common.timed('double'):
        algebra = session.algebra
        claims.add('double_dim_144', algebra.D.dim == 144 and 'hopf' in algebra.D.certified)
        claims.add('double_presentation', algebra.embedding.verify().passed
                   and algebra.embedding.pbw_rank() == 144)

    with common.timed('modules'):
        simples, census = simple_census(algebra)
        claims.add('simple_census', census.passed)
        claims.add('tensor_dual_laws', tensor_dual_laws(algebra, args.threads).passed)
        table = repmod.ext_table(simples, args.threads)
        characters = ['K_chi^%d' % i for i in range(6)]
        expected_chars = all(table[('K_chi^%d' % i, 'K_chi^%d' % j)] == (1 if (j - i) % 6 in (1, 5) else 0)
                             for i in range(6) for j in range(6))
        claims.add('ext_table_characters', expected_chars)
        claims.add('ext_vanishes_on_two_dim', all(n == 0 for (s, t), n in table.items()
                                                  if s not in characters or t not in characters))
        quiver = repmod.ext_quiver_and_type(simples, table)
        results['separated_graph'] = dict(quiver.component_types())
        results['separated_graph_type'] = quiver.separated_graph_type
        results['representation_type'] = quiver.representation_type
        if quiver.separated_graph_type != 'wild':
            errata.append({'table': 'representation type',
                           'detail': 'separated graph %s is %s, so only D/rad^2 D is classified; '
                                     'the printed wild type is not reproduced'
                                     % (dict(quiver.component_types()), quiver.separated_graph_type)})
        for l in range(6):
            cls = repmod.classify_two_dim_nonsimple(l, algebra)
            if cls.plus_minus_violation:
                errata.append({'table': 'M_%d^(+-)' % l, 'detail': 'violates %s' % cls.plus_minus_violation})
        printed = repmod.printed_projective_check(algebra, session.tables['printed_modules']['P'])
        errata.extend({'table': 'projective P', 'detail': e.axiom} for e in printed.failed())

    with common.timed('yd'):
        yd_ok = True
        for name, V in session.yds.items():
            yd_ok = yd_ok and ydcat.yd_report(V).passed and ydcat.braiding_of(V).braid_relation_holds()
        claims.add('yd_axioms_and_braid_relation', yd_ok)
        if args.check_tables:
            for report in (ydcat.verify_printed_coactions(algebra, session.tables, session.yds),
                           ydcat.verify_printed_braidings(algebra, session.tables, session.yds)):
                errata.extend({'table': report.subject, 'detail': e.axiom} for e in report.failed())

    with common.timed('nichols'):
        opts = session.nichols_options()
        partial = opts['maxdeg'] < 5
        braidings = OrderedDict((name, ydcat.braiding_of(V)) for name, V in session.yds.items())
        odd = [nichols.nichols_ranks(braidings['K_chi^%d' % k], **opts) for k in (1, 3, 5)]
        claims.add('exterior_algebras_odd_characters', all(r.ranks[:3] == [1, 1, 0] for r in odd))
        even = [nichols.nichols_ranks(braidings['K_chi^%d' % k], **opts) for k in (0, 2, 4)]
        claims.add('polynomial_algebras_even_characters', all(r.verdict == 'infinite' for r in even))
        finite = OrderedDict((name, nichols.nichols_ranks(braidings[name], relations=True, **opts))
                             for name in FINITE_NICHOLS)
        results['finite_nichols'] = OrderedDict((n, r.ranks) for n, r in finite.items())
        if partial:
            claims.add('finite_nichols_dim_6', None, 'maxdeg %d is too low' % opts['maxdeg'])
        else:
            claims.add('finite_nichols_dim_6', all(r.total == 6 and r.palindromic for r in finite.values()))
            pres_ok = True
            for key in ('V31', 'V35', 'V22', 'V24'):
                entry = session.tables['nichols_presentations'][key]
                p = nichols.PresentedBraidedAlgebra.from_table(key, entry, algebra.constants)
                pres_ok = pres_ok and nichols.check_presentation(p, braidings[entry['module']]).passed
            claims.add('nichols_presentations', pres_ok)
        oracle = all(_same_matrix(nichols.quantum_symmetrizer(braidings['V_{3,1}'], n),
                                    nichols.symmetrizer_by_permutations(braidings['V_{3,1}'], n)) for n in (2, 3, 4))
        claims.add('symmetrizer_factorization', oracle)
        verdicts = nichols.simple_verdicts(session.yds, algebra, **{k: v for k, v in opts.items()
                                                                    if k != 'extra_zero_degrees'})
        results['simple_verdicts'] = OrderedDict((n, v['verdict']) for n, v in verdicts.items())
        undecided = [n for n, v in verdicts.items() if v['verdict'] == 'undecided']
        if undecided:
            names = [n for n in undecided if n.startswith('V_')]
            results['dual_partners'] = nichols.dual_partners(session.yds, algebra, names, opts['maxdeg'],
                                                             opts['memory_budget_mb'], opts['bytes_per_entry'])
        finite_names = sorted(n for n, v in verdicts.items() if v['verdict'] == 'finite')
        if partial:
            claims.add('simple_nichols_verdicts', None, 'maxdeg %d is too low' % opts['maxdeg'])
        else:
            expected = sorted(['K_chi^1', 'K_chi^3', 'K_chi^5'] + list(FINITE_NICHOLS))
            claims.add('simple_nichols_verdicts', not undecided and finite_names == expected,
                       {'finite': finite_names, 'undecided': undecided})
        projective = [nichols.eigenone_witness(braidings['P_%d' % j], nichols.basis_candidates(4)) is not None
                      for j in range(6)]
        claims.add('projective_witnesses', all(projective))
        _, scan_report = nichols.indecomposable_infinite_scan(algebra)
        claims.add('non_simple_indecomposable_witnesses', scan_report.passed)
        errata.extend({'table': 'M family', 'detail': n} for n in scan_report.notes)

    with common.timed('bosonization'):
        suite = session.suite
        built = suite.build_all()
        dims = sorted(H.dim for H in built.values())
        claims.add('seven_biproducts', dims == [24, 24, 24, 72, 72, 72, 72])
        boson_ok = True
        coradical_ok = True
        for name, H in built.items():
            report = suite.verify_presentation(name)
            relations = [e.axiom for e in report.failed() if e.axiom.startswith('relation')]
            claims.add('presentation_relations_%s' % name, not relations, relations or None)
            coproducts = [e.axiom for e in report.failed() if e.axiom.startswith('coproduct')]
            claims.add('coproduct_identities_%s' % name, not coproducts, coproducts or None)
            for n in report.notes:
                table = 'coproducts of %s' if n.startswith('coproduct') else 'relations of %s'
                errata.append({'table': table % name, 'detail': n})
            boson_ok = boson_ok and len(bosonization.coinvariants(H)) == suite.data(name).dim
            coradical_ok = coradical_ok and not bosonization.coradical_report(H)['subalgebra']
        claims.add('coinvariants_dim_R', boson_ok)
        claims.add('coradical_not_subalgebra', coradical_ok)
        prints = OrderedDict((name, bosonization.fingerprint(built[name])) for name in ('V31', 'V35', 'V22', 'V24'))
        results['fingerprints'] = prints
        results['fingerprint_separation'] = bosonization.compare_fingerprints(prints)

    out = manifest(args, OrderedDict((name, c['passed'] is not False) for name, c in claims.items.items()))
    out['partial'] = partial
    out['claims'] = claims.to_json()
    out['results'] = results
    out['errata'] = errata
    emit(args, out)
    failed = claims.failed()
    if failed:
        log.error('Failed claims: %s' % ', '.join(failed))
    return EXIT_FAILED if failed else EXIT_OK


def _same_matrix(a, b):
    return linalg.is_zero(a - b)


COMMANDS = {
    'catalog': cmd_catalog,
    'modules': cmd_modules,
    'yd': cmd_yd,
    'nichols': cmd_nichols,
    'bosonize': cmd_bosonize,
    'full-report': full_report,
}


def build_parser():
    parser = argparse.ArgumentParser(prog='hopfdouble',
                                     description='Exact computations for the double of a 12-dimensional Hopf algebra')
    add_hopf_args(parser)
    sub = parser.add_subparsers(dest='command')
    sub.required = True
    p = sub.add_parser('catalog', help='Export or verify a catalog Hopf algebra')
    p.add_argument('action', choices=['export', 'verify'])
    p.add_argument('name', help='One of %s' % ', '.join(catalog.CATALOG_NAMES))
    p.add_argument('--perturb', help='Shift one structure constant, e.g. mult:0,0,0:+1')
    p = sub.add_parser('modules', help='Simple modules, Ext table and quiver')
    p.add_argument('action', choices=['list', 'certify', 'ext-table', 'quiver'])
    p.add_argument('--format', choices=['dot', 'json'], default='json')
    p = sub.add_parser('yd', help='Yetter-Drinfeld modules and braidings')
    p.add_argument('action', choices=['braiding', 'verify-tables'])
    p.add_argument('--module', help='Module name, e.g. V31, K1, P2, M0+')
    p = sub.add_parser('nichols', help='Ranks of a Nichols algebra')
    p.add_argument('--module', required=True)
    p.add_argument('--relations', action='store_true', help='Include kernels and new generators by degree')
    p = sub.add_parser('bosonize', help='Radford biproduct with C')
    p.add_argument('--module', required=True, help='One of %s' % ', '.join(bosonization.BOSONIZATION_NAMES))
    p.add_argument('--verify-presentation', action='store_true')
    p.add_argument('--export', help='Write the structure constants to this file')
    sub.add_parser('full-report', help='Run every check and write one report')
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parse_hopf_args(parser, argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    except ValueError as e:
        print('hopfdouble: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    common.setup_logging(args.log_level)
    session = Session(args)
    try:
        return COMMANDS[args.command](session, args)
    except (UnknownName, UsageError) as e:
        print('hopfdouble: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    except HopfError as e:
        log.error('%s: %s' % (type(e).__name__, e))
        log.debug(traceback.format_exc())
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
