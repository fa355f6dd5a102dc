"""
linemix/io
File formats: measurement CSV, plot-data CSV, JSON reports.
"""
