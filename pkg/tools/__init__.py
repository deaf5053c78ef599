"""
tools package: exact algebra, polyhedral geometry, bounds, logging.
"""
