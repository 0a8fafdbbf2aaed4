##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
