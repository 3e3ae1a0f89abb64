import argparse

from easydict import EasyDict as edict
from hopfdouble.config import hopf_config


def str2bool(v):
    if v.lower() in ('yes', 'true', 't', 'y', '1'):
        return True
    if v.lower() in ('no', 'false', 'f', 'n', '0'):
        return False
    else:
        raise argparse.ArgumentTypeError('Boolean value expected.')


def positive_int(v):
    value = int(v)
    if value < 1:
        raise argparse.ArgumentTypeError('Positive integer expected, got %s' % v)
    return value


def add_hopf_args(parser):
    parser.add_argument('--theta-sign',
                        choices=['plus', 'minus'],
                        help='Square root of xi - 1 to use (plus: theta = xi, minus: theta = -xi)')
    parser.add_argument('--maxdeg', type=int,
                        help='Highest degree for Nichols algebra ranks')
    parser.add_argument('--memory-budget-mb', type=int,
                        help='Memory budget for symmetrizer images')
    parser.add_argument('--threads', type=positive_int,
                        help='Number of worker threads')
    parser.add_argument('--out',
                        help='Output JSON file (stdout if not given)')
    parser.add_argument('--check-tables',
                        nargs='?', const='True',
                        type=str2bool,
                        help='Whether to compare against the printed tables')
    parser.add_argument('--env',
                        help='Named configuration to use (corresponds to py file in config/envs dir)')
    parser.add_argument('--cache-dir',
                        help='Directory for cached algebras')
    parser.add_argument('--no-cache',
                        nargs='?', const='True',
                        type=str2bool,
                        help='Whether to skip the on-disk cache')
    parser.add_argument('--log-level',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Logging level')
    return parser


def parse_hopf_args(parser, argv=None):
    args = parser.parse_args(argv)
    overrides = vars(args)
    if overrides.pop('no_cache', None):
        overrides['use_cache'] = False
    env = overrides.pop('env', None)
    hopf_args = hopf_config.get(env, overrides)
    return edict(hopf_args)
