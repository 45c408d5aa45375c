"""Routing domain layer.

Pure Python and numpy: instances, routes, feasibility rules, the pair
move and the reward of the improvement search.
"""
