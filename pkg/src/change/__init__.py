# Model change operators
