config = {
    'nichols': {'maxdeg': 6, 'memory_budget_mb': 256},
    'threads': 4,
    'check_tables': True,
}
