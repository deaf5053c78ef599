"""
configs package for workbench configuration.
"""
