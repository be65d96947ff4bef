"""Seat-plan diagrams, the algebra they span, and generator words."""
