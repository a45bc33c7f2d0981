# Command-line interface module
