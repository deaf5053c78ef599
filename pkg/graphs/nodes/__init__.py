"""
Pipeline nodes for the tropical basis graph.
"""
