# Comparison Complexity Lab
