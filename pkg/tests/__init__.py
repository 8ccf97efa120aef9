"""Tests package for the ranked_delegation project."""
