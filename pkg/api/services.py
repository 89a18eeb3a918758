"""
Shared between the management commands and the HTTP views: turn validated
query data into domain results, filling gaps from settings.RESONANCE.
"""
from dataclasses import asdict

from django.conf import settings

from expansions.series import r0_series, r1_series, r2_coeffs, taylor_exact
from moments.integrals import moment_closed_form, moment_quadrature
from moments.models import MomentMethod
from moments.sampling import moment_monte_carlo
from resonances.exact import nanosphere_resonance, resonance_exact, wave_number_exact
from resonances.models import NanoScaling, SolverConfig, SphereSpec
from resonances.solver import scan_branches

from .figure import figure_rows
from .verification import run_verification


def conf(key):
    return settings.RESONANCE[key]


def serializer_context():
    return {'threshold': conf('CERTIFICATION_THRESHOLD')}


def exact_mode(data):
    """Return tuple (spec, mode) for a ball or a nanosphere query."""
    if data['group'] == 'nano':
        scaling = NanoScaling(data['h'], data['eta0'])
        return scaling.sphere(), nanosphere_resonance(scaling, data['m'])
    spec = SphereSpec(data['r'], data['eta'], allow_complex=data['allow_complex'])
    return spec, resonance_exact(spec, data['m'])


def solved_modes(data, workers=1):
    """Branch scan rows: every mode field plus the distance to the closed form of its branch."""
    spec = SphereSpec(data['r'], data['eta'], allow_complex=data['allow_complex'])
    overrides = {'tol': data['tol']} if data.get('tol') is not None else {}
    modes = scan_branches(spec, data['m_max'], SolverConfig.from_settings(workers=workers, **overrides))
    rows = []
    for mode in modes:
        row = asdict(mode)
        row['closed_form_delta'] = abs(mode.k - wave_number_exact(spec, mode.branch_m))
        rows.append(row)
    return spec, rows


def moment_estimate(data, workers=None):
    n, method = data['n'], data['method']
    if method == MomentMethod.CLOSED_FORM:
        return moment_closed_form(n)
    if method == MomentMethod.QUADRATURE:
        return moment_quadrature(n, data.get('order') or conf('QUADRATURE_ORDER'))
    return moment_monte_carlo(
        n,
        data.get('samples') or conf('MC_SAMPLES'),
        seed=data['seed'] if data.get('seed') is not None else conf('MC_SEED'),
        shards=data.get('shards') or conf('MC_SHARDS'),
        workers=workers or conf('MC_WORKERS'),
    )


def expansion_bundle(data):
    """R0, R1, R2 and the Taylor series of the exact resonance, keyed by label."""
    max_order = data['max_order']
    moments = None
    if data['moments'] == 'mc':
        moments = [
            moment_monte_carlo(
                n, data.get('samples') or conf('MC_SAMPLES'),
                seed=data['seed'] if data.get('seed') is not None else conf('MC_SEED'),
                shards=conf('MC_SHARDS'), workers=conf('MC_WORKERS'),
            )
            for n in range(1, max_order)
        ]
    return {
        'r0': r0_series(),
        'r1': r1_series(max_order, moments),
        'r2': r2_coeffs(max_order, moments),
        'taylor': taylor_exact(data['taylor_order'], data['eta0'], conf('TAYLOR_DPS')),
    }


def _given(data, name, key):
    value = data.get(name)
    return conf(key) if value is None else value


def figure_data(data):
    return figure_rows(
        _given(data, 'h_min', 'FIGURE_H_MIN'),
        _given(data, 'h_max', 'FIGURE_H_MAX'),
        _given(data, 'steps', 'FIGURE_STEPS'),
    )


def verification_report(data):
    return run_verification(
        data['perturb_lambda0'],
        mc_samples=data.get('samples') or conf('MC_SAMPLES'),
        mc_seed=conf('MC_SEED'),
        mc_shards=conf('MC_SHARDS'),
        solver_config=SolverConfig.from_settings(),
        figure_range=(conf('FIGURE_H_MIN'), conf('FIGURE_H_MAX'), conf('FIGURE_STEPS')),
    )
