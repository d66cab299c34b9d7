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

from dNG.module.named_loader import NamedLoader

from healsim.runtime.invalid_rule_match_exception import InvalidRuleMatchException

from .utility_ledger import UtilityLedger
from .utility_patterns import UtilityPatterns

class UtilityEngine(object):
    """
The utility engine maintains the overall utility of an architecture model
incrementally. Change events only cause the patterns anchored on the
touched elements to be re-evaluated.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: utility
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, model, patterns = None):
        """
Constructor __init__(UtilityEngine)

:param model: Architecture model
:param patterns: Utility patterns; new instances if not defined

:since: v0.1.00
        """

        self.ledger = UtilityLedger()
        """
Match index and running total
        """
        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.model = model
        """
Architecture model
        """
        self.patterns = (UtilityPatterns.get_all() if (patterns is None) else patterns)
        """
Utility patterns
        """
    #

    def get_utility(self):
        """
Returns the current utility total.

:return: (float) Utility
:since:  v0.1.00
        """

        return self.ledger.total
    #

    def initialize(self):
        """
Searches all matches of the model and rebuilds the ledger.

:return: (float) Utility
:since:  v0.1.00
        """

        self.ledger = UtilityLedger()
        for match in UtilityEngine.find_all_matches(self.model, self.patterns).values(): self.ledger.add(match)

        _return = self.ledger.recompute_total()
        if (self.log_handler is not None): self.log_handler.debug("{0!r} initialized with {1:d} matches and utility {2!r}", self, len(self.ledger), _return, context = "utility")

        return _return
    #

    def process_events(self, events):
        """
Re-matches the patterns anchored on the elements touched by the given
change events and updates the ledger.

:param events: Change events

:return: (float) Utility difference
:since:  v0.1.00
        """

        anchors = { }

        for event in events:
            for element in event.get_elements(): anchors[id(element)] = element
        #

        new_matches = [ ]
        deleted_matches = [ ]

        for anchor in anchors.values():
            for pattern in self.patterns:
                if (not pattern.is_anchor(anchor)): continue

                recorded_match = self.ledger.get(( pattern.id, anchor.id ))
                match = pattern.match(self.model, anchor)

                if (recorded_match is None):
                    if (match is not None): new_matches.append(match)
                elif (match is None): deleted_matches.append(recorded_match)
                elif (pattern.get_utility(match) != recorded_match.cached_utility):
                    deleted_matches.append(recorded_match)
                    new_matches.append(match)
                #
            #
        #

        return UtilityEngine.utility_delta(self.ledger, new_matches, deleted_matches)
    #

    @staticmethod
    def find_all_matches(model, patterns = None):
        """
Searches all matches of the given patterns in the model and caches their
utility.

:param model: Architecture model
:param patterns: Utility patterns; new instances if not defined

:return: (dict) Matches by key
:since:  v0.1.00
        """

        if (patterns is None): patterns = UtilityPatterns.get_all()
        _return = { }

        for pattern in patterns:
            for anchor in pattern.get_candidates(model):
                match = pattern.match(model, anchor)

                if (match is not None):
                    match.cached_utility = pattern.get_utility(match)
                    _return[match.key] = match
                #
            #
        #

        return _return
    #

    @staticmethod
    def rule_impact(model, rule_match):
        """
Returns the utility increase predicted for the given rule match: the
absolute utility drop of the issue plus the utility enabled by new
positive matches minus the one of disabled positive matches.

:param model: Architecture model
:param rule_match: Rule match

:return: (float) Predicted utility increase
:since:  v0.1.00
        """

        if (not rule_match.issue.check(model)): raise InvalidRuleMatchException("Issue {0} does not exist anymore".format(rule_match.issue.id))
        return rule_match.template.predict_impact(model, rule_match)
    #

    @staticmethod
    def total_utility(model, patterns = None):
        """
Returns the overall utility of the model by searching all matches.

:param model: Architecture model
:param patterns: Utility patterns; new instances if not defined

:return: (float) Utility
:since:  v0.1.00
        """

        return fsum(match.cached_utility for match in UtilityEngine.find_all_matches(model, patterns).values())
    #

    @staticmethod
    def u1(model, match):
        """
Returns the utility contributed by the positive match of the component
bound to the given match: criticality times reliability times
connectivity.

:param model: Architecture model
:param match: Match binding a component

:return: (float) Utility contribution
:since:  v0.1.00
        """

        return UtilityPatterns.get_component_utility(match.bindings['component'])
    #

    @staticmethod
    def u2(model, match):
        """
Returns the utility contributed by the given negative match.

:param model: Architecture model
:param match: Negative match

:return: (float) Utility contribution
:since:  v0.1.00
        """

        return match.pattern.get_utility(match)
    #

    @staticmethod
    def utility_delta(ledger, new_matches, deleted_matches):
        """
Removes the deleted matches with their cached utility, adds the new ones
with a freshly computed utility and returns the difference.

:param ledger: Utility ledger
:param new_matches: Matches found
:param deleted_matches: Recorded matches lost

:return: (float) Utility difference
:since:  v0.1.00
        """

        contributions = [ ]

        for match in deleted_matches:
            contributions.append(-1 * match.cached_utility)
            ledger.remove(match)
        #

        for match in new_matches:
            match.cached_utility = match.pattern.get_utility(match)
            contributions.append(match.cached_utility)
            ledger.add(match)
        #

        return fsum(contributions)
    #
#
