"""Application packages: the command-line front end."""
