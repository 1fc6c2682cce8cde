kind = corner-skew

[corner-skew]
base = scalars
p = 1
alpha = 1
