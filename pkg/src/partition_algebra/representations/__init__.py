"""Bratteli path model and seminormal representation matrices."""
