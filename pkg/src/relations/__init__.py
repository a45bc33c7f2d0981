# Relations between interpretations and between concepts
