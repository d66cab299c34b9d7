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

class Plan(object):
    """
A plan is the ordered list of rule matches returned by a planner.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, rule_matches, planner_id, planning_time = 0.0):
        """
Constructor __init__(Plan)

:param rule_matches: Ordered rule matches
:param planner_id: ID of the planner
:param planning_time: Wall clock planning time in seconds

:since: v0.1.00
        """

        self.planner_id = planner_id
        """
ID of the planner
        """
        self.planning_time = planning_time
        """
Wall clock planning time in seconds
        """
        self.rule_matches = list(rule_matches)
        """
Ordered rule matches
        """
    #

    def __iter__(self):
        """
python.org: Return an iterator object.

:return: (object) Iterator
:since:  v0.1.00
        """

        return iter(self.rule_matches)
    #

    def __len__(self):
        """
python.org: Called to implement the built-in function len().

:return: (int) Number of rule matches
:since:  v0.1.00
        """

        return len(self.rule_matches)
    #

    def get_objective(self):
        """
Returns the final utility gain and the cost weighted completion time sum
of the plan executed sequentially from time 0.

:return: (tuple) Final utility gain and weighted completion time
:since:  v0.1.00
        """

        return Plan.evaluate(self.rule_matches)
    #

    def get_reward_gain(self, horizon):
        """
Returns the reward gained until the given horizon by executing the plan
sequentially from time 0.

:param horizon: Horizon in seconds

:return: (float) Reward gain
:since:  v0.1.00
        """

        completion = 0.0
        gains = [ ]

        for rule_match in self.rule_matches:
            completion += rule_match.cost
            if (completion < horizon): gains.append(rule_match.utility_increase * (horizon - completion))
        #

        return fsum(gains)
    #

    def get_template_ids(self):
        """
Returns the rule template IDs in plan order.

:return: (list) Rule template IDs
:since:  v0.1.00
        """

        return [ rule_match.template.id for rule_match in self.rule_matches ]
    #

    @staticmethod
    def evaluate(rule_matches):
        """
Returns the final utility gain and the cost weighted completion time sum
of the given rule match sequence.

:param rule_matches: Ordered rule matches

:return: (tuple) Final utility gain and weighted completion time
:since:  v0.1.00
        """

        completion = 0.0
        weighted_completions = [ ]

        for rule_match in rule_matches:
            completion += rule_match.cost
            weighted_completions.append(rule_match.utility_increase * completion)
        #

        return ( fsum(rule_match.utility_increase for rule_match in rule_matches), fsum(weighted_completions) )
    #
#
