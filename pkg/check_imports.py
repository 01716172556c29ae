import importlib
mods = ['characters', 'reducibility', 'derivatives', 'infchar', 'grassmann', 'spectral', 'reporting', 'crosscheck',
        'analytics.metrics', 'analytics.visualization', 'analytics.interactive_dashboard', 'main']
for m in mods:
    try:
        importlib.import_module(m)
        print('OK', m)
    except Exception as e:
        print('ERR', m, e)
