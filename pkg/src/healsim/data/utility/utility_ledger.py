# -*- coding: utf-8 -*-

"""
healsim
Architectural self-healing simulator
----------------------------------------------------------------------------
(C) direct Netware Group - All rights reserved

The following license agreement remains valid unless any additions or
changes are being made by direct Netware Group in a written form.

This program is free software; you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation; either version 2 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT
ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License for
more details.

You should have received a copy of the GNU General Public License along with
this program; if not, write to the Free Software Foundation, Inc.,
51 Franklin Street, Fifth Floor, Boston, MA 02110-1301, USA.
----------------------------------------------------------------------------
https://www.direct-netware.de/redirect?licenses;gpl
----------------------------------------------------------------------------
"""

from math import fsum

from dNG.runtime.value_exception import ValueException

class UtilityLedger(object):
    """
The ledger keeps the current match index together with the running
utility total.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: utility
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self):
        """
Constructor __init__(UtilityLedger)

:since: v0.1.00
        """

        self.matches = { }
        """
Matches by key
        """
        self.total = 0.0
        """
Running utility total
        """
    #

    def __contains__(self, key):
        """
python.org: Called to implement membership test operators.

:param key: Match key

:return: (bool) True if a match with the given key is recorded
:since:  v0.1.00
        """

        return (key in self.matches)
    #

    def __len__(self):
        """
python.org: Called to implement the built-in function len().

:return: (int) Number of matches
:since:  v0.1.00
        """

        return len(self.matches)
    #

    def add(self, match):
        """
Records the given match and adds its cached utility.

:param match: Match with cached utility

:since: v0.1.00
        """

        if (match.cached_utility is None): raise ValueException("{0!r} lacks a cached utility".format(match))
        if (match.key in self.matches): raise ValueException("{0!r} is already recorded".format(match))

        self.matches[match.key] = match
        self.total += match.cached_utility
    #

    def get(self, key):
        """
Returns the match recorded for the given key.

:param key: Match key

:return: (object) Match; None if not recorded
:since:  v0.1.00
        """

        return self.matches.get(key)
    #

    def recompute_total(self):
        """
Recomputes the total from all recorded cached utilities.

:return: (float) Utility total
:since:  v0.1.00
        """

        self.total = fsum(match.cached_utility for match in self.matches.values())
        return self.total
    #

    def remove(self, match):
        """
Removes the given match and subtracts its cached utility.

:param match: Recorded match

:since: v0.1.00
        """

        if (self.matches.get(match.key) is not match): raise ValueException("{0!r} is not recorded".format(match))

        del(self.matches[match.key])
        self.total -= match.cached_utility
    #
#
