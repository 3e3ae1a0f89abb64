import copy
import os
import pprint

from easydict import EasyDict as edict
import yaml

from hopfdouble.lib.scalars import ONE, as_scalar, xi_power


def resolve_relative_path(path):
    return os.path.join(os.path.dirname(__file__), path)


hopf_defaults = {
    # theta is a fixed square root of xi - 1 inside Q(xi): +xi or -xi
    'theta_sign': 'plus',

    'nichols': {
        'maxdeg': 6,
        'memory_budget_mb': 64,
        'bytes_per_entry': 160,
        'extra_zero_degrees': 2,
    },
    'verify': {'full_check_max_dim': 48},
    'threads': 1,

    'cache_dir': '~/.cache/hopfdouble',
    'use_cache': True,
    'schema_version': 1,

    # coefficient grid for isomorphism witnesses
    'isomorphism_grid': ['0', '1', '-1', 'x', '-x', '-1+x', '1-x'],

    'tables_file': 'printed_tables.yml',
    'check_tables': False,
    'out': None,
    'log_level': 'INFO',
}


def update_dict(d, u):
    if d and u:
        for k, v in u.items():
            if v is None:  # avoid overwriting with None
                continue
            if isinstance(v, dict) and isinstance(d.get(k), dict):
                d[k] = update_dict(d[k], v)
            else:
                d[k] = v
    return d


def get(env_config, override_args={}, print_config=False):
    hopfargs = copy.deepcopy(hopf_defaults)
    if env_config:
        env = __import__('hopfdouble.config.envs.' + env_config, fromlist=['config'])
        update_dict(hopfargs, env.config)

    # flat command line flags that live in nested sections
    nested = {'maxdeg': ('nichols', 'maxdeg'), 'memory_budget_mb': ('nichols', 'memory_budget_mb'),
              'full_check_max_dim': ('verify', 'full_check_max_dim')}
    clean_args = copy.deepcopy(override_args)
    for k, (section, key) in nested.items():
        v = clean_args.pop(k, None)
        if v is not None:
            hopfargs[section][key] = v
    update_dict(hopfargs, clean_args)

    if hopfargs['theta_sign'] not in ('plus', 'minus'):
        raise ValueError('theta_sign must be plus or minus, got %r' % hopfargs['theta_sign'])
    if not os.path.isabs(hopfargs['tables_file']):
        hopfargs['tables_file'] = resolve_relative_path(hopfargs['tables_file'])

    if print_config:
        pprint.pprint(hopfargs)

    return edict(hopfargs)


def load_printed_tables(path=None):
    with open(path or resolve_relative_path(hopf_defaults['tables_file']), 'r', encoding='utf-8') as f:
        return yaml.safe_load(f)


def table_scalar(value, theta):
    """Coefficient from the tables file: a literal, or [literal, k] meaning literal * theta^k"""
    if isinstance(value, (list, tuple)):
        literal, k = value
        return as_scalar(str(literal)) * theta ** int(k)
    return as_scalar(str(value))


def table_coefficient(spec, constants, lam1=ONE, index=0):
    """Coefficient from the tables file.

    A mapping {c, xi, Lam, lam, theta, sign} stands for
    c * xi^xi * Lambda^Lam * lam1^lam * theta^theta * (-1)^(index * sign);
    anything else is read by table_scalar.
    """
    if not isinstance(spec, dict):
        return table_scalar(spec, constants.theta)
    value = as_scalar(str(spec.get('c', 1)))
    value = value * xi_power(int(spec.get('xi', 0)))
    value = value * constants.lam ** int(spec.get('Lam', 0))
    value = value * lam1 ** int(spec.get('lam', 0))
    value = value * constants.theta ** int(spec.get('theta', 0))
    if (index * int(spec.get('sign', 0))) % 2:
        value = -value
    return value
