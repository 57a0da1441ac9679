# constants.py
#
# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
############################################################################

# supported file types
FILE_TYPES = [".yaml | .yml", ".txt"]

# version of the structured suite report layout
REPORT_SCHEMA_VERSION = 1

# kinds of directed index sets
NATURALS = "naturals"
PAIR_NATURALS = "pair_naturals"
SYMBOLIC_UNCOUNTABLE = "symbolic_uncountable"
INDEX_KINDS = (NATURALS, PAIR_NATURALS, SYMBOLIC_UNCOUNTABLE)

# kinds of Riesz space instances
RATIONALS = "rationals"
RATIONAL_VECTOR = "vector"
FIN_SUPP_SEQ = "finsupp"

# pointwise operations accepted by nets.combine
COMBINE_OPS = ("sup", "inf", "add", "sub", "scale", "abs")

# dominating-net template families tried by witness_search
WITNESS_TEMPLATES = ("zero", "harmonic", "geometric")

# claims understood by the `check` subcommand
CLAIMS = ("order", "st", "ru")

# verdict clause names
CLAUSE_DOMINATION = "domination"
CLAUSE_DECREASING = "decreasing"
CLAUSE_INFIMUM = "infimum"
CLAUSE_MEASURE = "measure"
CLAUSE_UNDETERMINED = "undetermined"
CLAUSE_LEQ = "pointwise_leq"
