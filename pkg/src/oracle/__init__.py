# Finite-universe oracle
