# Model change toolkit
