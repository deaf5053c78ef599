"""
graphs package: the tropical basis pipeline as a LangGraph.
"""
