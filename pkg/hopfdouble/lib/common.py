from collections import namedtuple
import contextlib
import json
import logging as log
import os
import tempfile
from timeit import default_timer as timer

import psutil

FORMAT = '%(asctime)s %(levelname)s %(message)s'

Timing = namedtuple('Timing', 'name secs')

timings = []


def setup_logging(level='INFO'):
    if isinstance(level, str):
        level = getattr(log, level.upper(), log.INFO)
    log.basicConfig(format=FORMAT, level=level)
    log.getLogger().setLevel(level)


def ensure_dir_exists(path):
    try:
        if not os.path.isdir(path):
            os.makedirs(path)
    except OSError:
        if not os.path.isdir(path):
            raise


@contextlib.contextmanager
def timed(name):
    start = timer()
    yield
    timing = Timing(name, timer() - start)
    timings.append(timing)
    log.info('%s took %.2f secs' % (timing.name, timing.secs))


def available_memory_mb():
    return psutil.virtual_memory().available / (1024 * 1024)


def write_json(path, obj):
    """Write JSON atomically (temporary file in the same directory, then rename)"""
    dirname = os.path.dirname(os.path.abspath(path))
    ensure_dir_exists(dirname)
    fd, tmp = tempfile.mkstemp(dir=dirname, suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            json.dump(obj, f, indent=1, sort_keys=True)
            f.write('\n')
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def load_json(path):
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


class JsonCache:
    """ Disk cache of constructed algebras keyed by (name, theta sign, schema version) """
    def __init__(self, cache_dir, theta_sign, schema_version, enabled=True):
        self.cache_dir = os.path.expanduser(cache_dir) if cache_dir else None
        self.theta_sign = theta_sign
        self.schema_version = schema_version
        self.enabled = enabled and self.cache_dir is not None

    def path(self, name):
        filename = '%s.%s.v%d.json' % (name, self.theta_sign, self.schema_version)
        return os.path.join(self.cache_dir, filename)

    def get(self, name):
        if not self.enabled:
            return None
        path = self.path(name)
        if not os.path.isfile(path):
            return None
        try:
            data = load_json(path)
        except (OSError, ValueError) as e:
            log.warning('Ignoring unreadable cache entry %s: %s' % (path, e))
            return None
        if data.get('schema_version') != self.schema_version:
            return None
        log.debug('Loaded %s from cache', name)
        return data

    def put(self, name, data):
        if not self.enabled:
            return
        data = dict(data)
        data['schema_version'] = self.schema_version
        write_json(self.path(name), data)
