"""Command-line interface for cknspectral."""
