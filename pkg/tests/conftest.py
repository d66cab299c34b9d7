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

from numpy.random import default_rng
import pytest

from dNG.data.settings import Settings

from healsim.analysis.issue import Issue
from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.utility.utility_engine import UtilityEngine
from healsim.data.utility.utility_patterns import UtilityPatterns
from healsim.planning.rule_templates import RuleTemplates

class RandomSchedule(object):
    """
Random sequence of failure injections and repairs on a model.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: tests
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, model, seed, failure_likelihood = 0.6):
        """
Constructor __init__(RandomSchedule)

:param model: Architecture model
:param seed: Random seed
:param failure_likelihood: Likelihood of a failure injection per step

:since: v0.1.00
        """

        self.failure_likelihood = failure_likelihood
        self.issue_number = 0
        self.model = model
        self.random = default_rng(seed)
        self.templates = RuleTemplates.get_default()
        self.time = 0.0
    #

    def get_issues(self):
        """
Returns issues for all negative matches found by a full search.

:return: (list) Issue instances
:since:  v0.1.00
        """

        _return = [ ]

        for match in UtilityEngine.find_all_matches(self.model, UtilityPatterns.get_negative()).values():
            self.issue_number += 1
            _return.append(Issue("I{0:d}".format(self.issue_number), match, self.model))
        #

        return _return
    #

    def inject(self):
        """
Injects a failure of a random kind into a random eligible target.

:return: (list) Change events; empty if nothing is eligible
:since:  v0.1.00
        """

        _return = [ ]
        kind = FailureKind.ALL[int(self.random.integers(0, len(FailureKind.ALL)))]
        targets = self.model.get_eligible_targets(kind)

        if (len(targets) > 0):
            target = targets[int(self.random.integers(0, len(targets)))]
            _return = self.model.inject_failure(kind, target, self.time)
        #

        return _return
    #

    def repair(self, annotations = None):
        """
Applies a random applicable rule to a random issue.

:param annotations: Annotations the issue is taken from; a full search
                    if not defined

:return: (tuple) Rule match and change events; ( None, [ ] ) if no issue
         exists
:since:  v0.1.00
        """

        _return = ( None, [ ] )
        issues = (self.get_issues() if (annotations is None) else annotations.get_issues())

        if (len(issues) > 0):
            issue = issues[int(self.random.integers(0, len(issues)))]
            rule_matches = [ template.create_rule_match(self.model, issue) for template in self.templates ]
            rule_matches = [ rule_match for rule_match in rule_matches if rule_match is not None ]

            rule_match = rule_matches[int(self.random.integers(0, len(rule_matches)))]
            _return = ( rule_match, self.model.apply_repair(rule_match, self.time, annotations) )
        #

        return _return
    #

    def step(self, annotations = None):
        """
Runs one random step.

:param annotations: Annotations repaired issues are taken from

:return: (list) Change events
:since:  v0.1.00
        """

        self.time += 1.0

        if (self.random.random() < self.failure_likelihood): _return = self.inject()
        else: _return = self.repair(annotations)[1]

        return _return
    #
#

@pytest.fixture(autouse = True)
def restore_settings():
    settings = Settings.get_dict()
    backup = dict(settings)

    yield

    settings.clear()
    settings.update(backup)
#

@pytest.fixture
def model():
    return ArchitectureModel.build(1, 0)
#

@pytest.fixture
def model_3_shops():
    return ArchitectureModel.build(3, 7)
#

@pytest.fixture
def random_schedule():
    return RandomSchedule
#
