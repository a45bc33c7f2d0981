# Interpretations module
