"""
linemix/handlers/__init__.py
One handler per CLI subcommand. Each takes the parsed argparse namespace
and the process settings and returns an exit code.
"""
