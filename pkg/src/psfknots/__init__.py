"""Free-group, Whitehead-graph and relator machinery for P/P and P/SF knot exteriors."""
__version__ = "0.1.0"
