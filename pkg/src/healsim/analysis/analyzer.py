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

from dNG.module.named_loader import NamedLoader

from healsim.data.architecture.change_event import ChangeEvent
from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.utility.utility_engine import UtilityEngine
from healsim.data.utility.utility_patterns import UtilityPatterns

class Analyzer(object):
    """
The analyzer keeps the issues of the annotations in sync with the model.
Stale issues are dropped and the negative patterns relevant for each
change event are matched on the changed element only.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: analysis
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    RELEVANT_PATTERNS = { ChangeEvent.COMPONENT_CRASHED: ( FailureKind.CF1, ),
                          ChangeEvent.COMPONENT_REMOVED: ( FailureKind.CF3, ),
                          ChangeEvent.EXCEPTION_OCCURRED: ( FailureKind.CF2, ),
                          ChangeEvent.CONNECTOR_CRASHED: ( FailureKind.CF4, ),
                          ChangeEvent.COMPONENT_RESTARTED: FailureKind.COMPONENT_KINDS,
                          ChangeEvent.COMPONENT_REDEPLOYED: FailureKind.COMPONENT_KINDS,
                          ChangeEvent.COMPONENT_REPLACED: FailureKind.COMPONENT_KINDS,
                          ChangeEvent.CONNECTOR_RECREATED: ( FailureKind.CF4, )
                        }
    """
Negative patterns relevant per change event kind
    """

    def __init__(self, patterns = None):
        """
Constructor __init__(Analyzer)

:param patterns: Utility patterns; new instances if not defined

:since: v0.1.00
        """

        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.match_attempts = 0
        """
Number of checks and local match attempts
        """
        self.patterns = { pattern.id: pattern for pattern in UtilityPatterns.get_negative(patterns) }
        """
Negative patterns by ID
        """
    #

    def analyze(self, annotations, changes, model):
        """
Updates the issues of the annotations for the given change events.

:param annotations: Annotations
:param changes: Change events since the last run
:param model: Architecture model

:return: (object) Annotations
:since:  v0.1.00
        """

        stale_issues = 0

        for issue in annotations.get_issues():
            self.match_attempts += 1

            if (not issue.check(model)):
                annotations.delete_issue(issue)
                stale_issues += 1
            #
        #

        new_issues = 0

        for change in changes:
            for pattern_id in Analyzer.RELEVANT_PATTERNS.get(change.kind, ( )):
                pattern = self.patterns.get(pattern_id)
                if (pattern is None): continue

                self.match_attempts += 1
                match = pattern.match(model, change.subject)

                if (match is not None and (not annotations.exists_issue(match.key))):
                    match.cached_utility = pattern.get_utility(match)
                    annotations.add_issue(match, model)

                    new_issues += 1
                #
            #
        #

        if (self.log_handler is not None):
            self.log_handler.debug("{0!r} processed {1:d} changes: {2:d} new and {3:d} stale issues", self, len(changes), new_issues, stale_issues, context = "analysis")
        #

        return annotations
    #

    @staticmethod
    def issue_oracle(model, patterns = None):
        """
Returns all negative matches of the model found by a full search.

:param model: Architecture model
:param patterns: Utility patterns; new instances if not defined

:return: (dict) Negative matches by key
:since:  v0.1.00
        """

        return UtilityEngine.find_all_matches(model, UtilityPatterns.get_negative(patterns))
    #
#
