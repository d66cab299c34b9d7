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

from bisect import bisect_right

from dNG.data.settings import Settings
from dNG.runtime.value_exception import ValueException

from .issue import Issue

class Annotations(object):
    """
Annotations persist across MAPE runs. They hold the current issues and the
top-k best rule matches selected by the last planning step.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: analysis
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, k = None):
        """
Constructor __init__(Annotations)

:param k: Maximum number of best rules; "healsim_planner_k" if not
          defined

:since: v0.1.00
        """

        if (k is None): k = Settings.get("healsim_planner_k", 100)
        if (k < 1): raise ValueException("k must be positive")

        self.best_rules = [ ]
        """
Best rule matches ordered by descending ratio
        """
        self._best_rule_keys = [ ]
        """
Negative ratios of the best rule matches for bisection
        """
        self.issues = { }
        """
Issues by key
        """
        self.k = k
        """
Maximum number of best rules
        """
        self._next_issue_number = 1
        """
Sequence number of the next issue
        """
    #

    def __len__(self):
        """
python.org: Called to implement the built-in function len().

:return: (int) Number of issues
:since:  v0.1.00
        """

        return len(self.issues)
    #

    def add_best_rule(self, rule_match):
        """
Inserts the rule match into the top-k list ordered by descending ratio.
Rule matches with equal ratios keep their insertion order.

:param rule_match: Rule match

:return: (bool) True if the rule match is part of the top-k list
:since:  v0.1.00
        """

        key = -1 * rule_match.ratio
        position = bisect_right(self._best_rule_keys, key)

        _return = (position < self.k)

        if (_return):
            self._best_rule_keys.insert(position, key)
            self.best_rules.insert(position, rule_match)

            if (len(self.best_rules) > self.k):
                self._best_rule_keys.pop()
                self.best_rules.pop()
            #
        #

        return _return
    #

    def add_issue(self, match, model):
        """
Adds an issue for the given negative match.

:param match: Negative match with cached utility
:param model: Architecture model the match was found in

:return: (object) Issue instance
:since:  v0.1.00
        """

        if (match.key in self.issues): raise ValueException("Issue for {0!r} exists already".format(match))

        _return = Issue("I{0:d}".format(self._next_issue_number), match, model)
        self._next_issue_number += 1

        self.issues[match.key] = _return
        return _return
    #

    def delete_issue(self, issue):
        """
Deletes the given issue if it is still recorded.

:param issue: Issue instance

:since: v0.1.00
        """

        if (self.issues.get(issue.key) is issue): del(self.issues[issue.key])
    #

    def exists_issue(self, key):
        """
Returns true if an issue with the given key is recorded.

:param key: Issue key

:return: (bool) True if recorded
:since:  v0.1.00
        """

        return (key in self.issues)
    #

    def get_best_rules(self):
        """
Returns the best rule matches ordered by descending ratio.

:return: (list) Rule matches
:since:  v0.1.00
        """

        return list(self.best_rules)
    #

    def get_issue(self, key):
        """
Returns the issue with the given key.

:param key: Issue key

:return: (object) Issue; None if not recorded
:since:  v0.1.00
        """

        return self.issues.get(key)
    #

    def get_issues(self):
        """
Returns all issues in detection order.

:return: (list) Issues
:since:  v0.1.00
        """

        return list(self.issues.values())
    #

    def reset_best_rules(self):
        """
Clears the best rule list.

:since: v0.1.00
        """

        self.best_rules = [ ]
        self._best_rule_keys = [ ]
    #

    def set_best_rules(self, rule_matches):
        """
Replaces the best rule list with the given rule matches in the given
order.

:param rule_matches: Rule matches

:since: v0.1.00
        """

        self.best_rules = list(rule_matches[:self.k])
        self._best_rule_keys = [ -1 * rule_match.ratio for rule_match in self.best_rules ]
    #
#
