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

from itertools import permutations, product

import numpy

from dNG.data.settings import Settings

from healsim.runtime.oracle_too_large_exception import OracleTooLargeException

from .abstract_planner import AbstractPlanner
from .plan import Plan

class OraclePlanner(AbstractPlanner):
    """
Optimal planner searching rule assignments and execution orders. Final
utility is maximized first, accumulated utility over time second.

Assignments are restricted to the rule matches with the maximal utility
increase per issue as any other assignment yields a lower final utility.
Small instances are solved by enumerating every assignment and order.
Larger instances start from the ratio ordered sequence which is certified
by evaluating every pairwise interchange and every rule substitution.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    ENUMERATION_LIMIT = 5
    """
Maximum number of issues solved by full enumeration
    """
    TOLERANCE = 1e-9
    """
Relative tolerance for objective improvements
    """

    id = "oracle"
    """
Planner ID
    """

    def __init__(self, templates = None, exhaustive_limit = None, calibrated = False):
        """
Constructor __init__(OraclePlanner)

:param templates: Rule templates; default ones if not defined
:param exhaustive_limit: Maximum number of issues solved exhaustively;
                         "healsim_oracle_exhaustive_limit" if not defined
:param calibrated: True to return the optimum without the exhaustive
                   search for simulations using calibrated planning times

:since: v0.1.00
        """

        AbstractPlanner.__init__(self, templates)

        if (exhaustive_limit is None): exhaustive_limit = Settings.get("healsim_oracle_exhaustive_limit", 1000)

        self.calibrated = calibrated
        """
True to skip the exhaustive search
        """
        self.evaluations = 0
        """
Number of candidate sequences evaluated
        """
        self.exhaustive_limit = exhaustive_limit
        """
Maximum number of issues solved exhaustively
        """
    #

    def _get_candidates(self, annotations, model):
        """
Returns the rule matches with the maximal utility increase per issue.

:param annotations: Annotations
:param model: Architecture model

:return: (list) List of candidate rule match lists per issue
:since:  v0.1.00
        """

        _return = [ ]

        for issue in annotations.get_issues():
            rule_matches = [ ]

            for template in self.templates_by_kind.get(issue.kind, ( )):
                rule_match = self._create_rule_match(template, model, issue)
                if (rule_match is not None): rule_matches.append(rule_match)
            #

            if (len(rule_matches) > 0):
                utility_increase = max(rule_match.utility_increase for rule_match in rule_matches)
                _return.append([ rule_match for rule_match in rule_matches if rule_match.utility_increase == utility_increase ])
            #
        #

        return _return
    #

    def _is_improvement(self, objective, best_objective):
        """
Returns true if the objective is lexicographically better than the best
one found so far.

:param objective: Final utility gain and weighted completion time
:param best_objective: Best objective found so far

:return: (bool) True if better
:since:  v0.1.00
        """

        gain_tolerance = OraclePlanner.TOLERANCE * max(1.0, abs(best_objective[0]))
        completion_tolerance = OraclePlanner.TOLERANCE * max(1.0, abs(best_objective[1]))

        if (objective[0] > best_objective[0] + gain_tolerance): _return = True
        elif (objective[0] < best_objective[0] - gain_tolerance): _return = False
        else: _return = (objective[1] < best_objective[1] - completion_tolerance)

        return _return
    #

    def _plan(self, annotations, model):
        """
Planner specific implementation of "plan()".

:param annotations: Annotations
:param model: Architecture model

:return: (list) Ordered rule matches
:since:  v0.1.00
        """

        issue_count = len(annotations)

        if ((not self.calibrated) and issue_count > self.exhaustive_limit):
            raise OracleTooLargeException("{0:d} issues exceed the exhaustive limit of {1:d}".format(issue_count, self.exhaustive_limit))
        #

        candidates = self._get_candidates(annotations, model)

        if (self.calibrated): sequence = OraclePlanner.solve_decomposed(candidates)
        elif (len(candidates) <= OraclePlanner.ENUMERATION_LIMIT): sequence = self._solve_by_enumeration(candidates)
        else: sequence = self._solve_by_interchange(candidates)

        for rule_match in sequence: rule_match.issue.handled_by = rule_match

        annotations.set_best_rules(sequence)
        return annotations.get_best_rules()
    #

    def _solve_by_enumeration(self, candidates):
        """
Evaluates every assignment and every execution order.

:param candidates: List of candidate rule match lists per issue

:return: (list) Optimal rule match sequence
:since:  v0.1.00
        """

        _return = OraclePlanner.solve_decomposed(candidates)
        best_objective = Plan.evaluate(_return)

        for assignment in product(*candidates):
            for sequence in permutations(assignment):
                self.evaluations += 1
                objective = Plan.evaluate(sequence)

                if (self._is_improvement(objective, best_objective)):
                    _return = list(sequence)
                    best_objective = objective
                #
            #
        #

        return _return
    #

    def _solve_by_interchange(self, candidates):
        """
Improves the ratio ordered sequence until neither a pairwise interchange
nor a rule substitution improves the objective.

:param candidates: List of candidate rule match lists per issue

:return: (list) Optimal rule match sequence
:since:  v0.1.00
        """

        _return = OraclePlanner.solve_decomposed(candidates)
        sequence_size = len(_return)

        alternatives = { id(rule_match.issue): candidate_list for candidate_list in candidates for rule_match in candidate_list }

        increases = numpy.array([ rule_match.utility_increase for rule_match in _return ], dtype = float)
        costs = numpy.array([ rule_match.cost for rule_match in _return ], dtype = float)
        best_objective = ( numpy.sum(increases), numpy.dot(increases, numpy.cumsum(costs)) )

        is_improved = True

        while (is_improved):
            is_improved = False

            for position in range(sequence_size):
                for other_position in range(position + 1, sequence_size):
                    order = numpy.arange(sequence_size)
                    order[position], order[other_position] = other_position, position

                    self.evaluations += 1
                    objective = ( best_objective[0], numpy.dot(increases[order], numpy.cumsum(costs[order])) )

                    if (self._is_improvement(objective, best_objective)):
                        _return = [ _return[index] for index in order ]
                        increases = increases[order]
                        costs = costs[order]
                        best_objective = objective
                        is_improved = True
                    #
                #

                for rule_match in alternatives[id(_return[position].issue)]:
                    if (rule_match is _return[position]): continue

                    substituted_increases = increases.copy()
                    substituted_costs = costs.copy()
                    substituted_increases[position] = rule_match.utility_increase
                    substituted_costs[position] = rule_match.cost

                    self.evaluations += 1
                    objective = ( numpy.sum(substituted_increases), numpy.dot(substituted_increases, numpy.cumsum(substituted_costs)) )

                    if (self._is_improvement(objective, best_objective)):
                        _return[position] = rule_match
                        increases = substituted_increases
                        costs = substituted_costs
                        best_objective = objective
                        is_improved = True
                    #
                #
            #
        #

        return _return
    #

    @staticmethod
    def solve_decomposed(candidates):
        """
Selects the cheapest rule match per issue and orders them by descending
ratio keeping the issue order on ties.

:param candidates: List of candidate rule match lists per issue

:return: (list) Rule match sequence
:since:  v0.1.00
        """

        selected = [ min(candidate_list, key = lambda rule_match: rule_match.cost) for candidate_list in candidates ]
        return sorted(selected, key = lambda rule_match: -1 * rule_match.ratio)
    #
#
