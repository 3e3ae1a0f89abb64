import argparse

import pytest

from hopfdouble.config import hopf_config
from hopfdouble.config.hopf_args import add_hopf_args, parse_hopf_args, str2bool
from hopfdouble.lib.scalars import ONE, XI, named_constants


def test_defaults():
    cfg = hopf_config.get(None)
    assert cfg.theta_sign == 'plus'
    assert cfg.nichols.maxdeg == 6
    assert cfg.verify.full_check_max_dim == 48
    assert cfg.tables_file.endswith('printed_tables.yml')


def test_flat_overrides_land_in_sections():
    cfg = hopf_config.get(None, {'maxdeg': 3, 'memory_budget_mb': 8, 'threads': None})
    assert cfg.nichols.maxdeg == 3
    assert cfg.nichols.memory_budget_mb == 8
    assert cfg.nichols.bytes_per_entry == 160
    assert cfg.threads == 1


@pytest.mark.parametrize('env, maxdeg, use_cache, sign', [
    ('quick', 4, False, 'plus'),
    ('full', 6, True, 'plus'),
    ('theta_minus', 6, True, 'minus'),
])
def test_envs(env, maxdeg, use_cache, sign):
    cfg = hopf_config.get(env)
    assert cfg.nichols.maxdeg == maxdeg
    assert cfg.use_cache == use_cache
    assert cfg.theta_sign == sign


def test_bad_theta_sign():
    with pytest.raises(ValueError):
        hopf_config.get(None, {'theta_sign': 'both'})


def test_table_coefficients():
    const = named_constants('plus')
    assert hopf_config.table_coefficient({'c': 2, 'xi': 1}, const) == XI + XI
    assert hopf_config.table_coefficient({'sign': 1}, const, index=1) == -ONE
    assert hopf_config.table_coefficient({'sign': 1}, const, index=2) == ONE
    assert hopf_config.table_coefficient({'lam': 2}, const, lam1=XI) == XI * XI
    assert hopf_config.table_coefficient('1-x', const) == ONE - XI
    assert hopf_config.table_coefficient(['2', 1], const) == (ONE + ONE) * const.theta


def test_printed_tables_load(tables):
    assert {'dual_coproducts', 'braidings', 'nichols_presentations', 'bosonizations'} <= set(tables)


def test_str2bool():
    assert str2bool('yes') and str2bool('1')
    assert not str2bool('False')
    with pytest.raises(argparse.ArgumentTypeError):
        str2bool('maybe')


def test_parse_hopf_args():
    parser = add_hopf_args(argparse.ArgumentParser())
    cfg = parse_hopf_args(parser, ['--no-cache', 'true', '--maxdeg', '5', '--env', 'quick'])
    assert cfg.use_cache is False
    assert cfg.nichols.maxdeg == 5
    assert 'no_cache' not in cfg
    cfg = parse_hopf_args(parser, [])
    assert cfg.use_cache is True
    assert cfg.nichols.maxdeg == 6
