"""Command-line front end, configuration, logging and verification suites."""
