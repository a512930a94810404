# coding: utf-8
#

# version managed by poetry
__version__ = '0.0.0'

# theory catalog history
# 1.1 G lists the definitions of the derived generators
# 1.0 M, B, R, D, G
__catalog_version__ = '1.1'
