# Concept syntax module
