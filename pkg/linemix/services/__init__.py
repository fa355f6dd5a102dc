"""
linemix/services
Harness services: Monte-Carlo benchmarking and the trial store.
"""
