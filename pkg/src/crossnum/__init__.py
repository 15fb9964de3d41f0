"""Exact toolkit for rectilinear crossing numbers of complete graphs."""
