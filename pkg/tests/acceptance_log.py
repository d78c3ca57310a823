"""Shared record of acceptance verdicts, printed in the pytest summary."""

RESULTS = {}
