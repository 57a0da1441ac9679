# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
############################################################################
