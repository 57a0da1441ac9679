# THIS FILE IS GENERATED FROM rieszstat SETUP.PY
short_version = '0.1.0'
version = '0.1.0.dev0'
release = False
