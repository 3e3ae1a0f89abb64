config = {
    'theta_sign': 'minus',
    'check_tables': True,
}
