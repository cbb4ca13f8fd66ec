"""Eccentricity, normality and span invariants of trees."""
