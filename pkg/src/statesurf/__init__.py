"""statesurf: state surfaces of link diagrams.

Builds Kauffman states and their state graphs from link diagrams,
decides adequacy/homogeneity, detects fibering, bounds the guts of the
state surface, evaluates the Jones polynomial two independent ways, and
turns all of it into two-sided hyperbolic volume estimates for positive
braid closures and Montesinos links.
"""

__version__ = "0.1.0"
