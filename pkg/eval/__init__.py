"""
Fixture suite: reference ideals, the lambda table and the closed-form bounds.
"""
