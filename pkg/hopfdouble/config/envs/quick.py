config = {
    'nichols': {'maxdeg': 4, 'extra_zero_degrees': 1},
    'use_cache': False,
}
