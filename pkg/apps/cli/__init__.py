"""
tropws command-line front end.
"""
