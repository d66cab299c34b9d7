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

from healsim.analysis.analyzer import Analyzer
from healsim.analysis.annotations import Annotations
from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.utility.utility_engine import UtilityEngine
from healsim.data.utility.utility_patterns import UtilityPatterns

from .rule_template import RuleTemplate
from .rule_templates import RuleTemplates
from .validation_report import ValidationReport

class RuleSetValidator(object):
    """
Checks a rule set against the assumptions making per issue planning
optimal. Each rule is executed on a single shop marketplace with one issue
of the failure kind it handles and a second independent issue. Matches
before and after the execution are compared.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, seed = 0):
        """
Constructor __init__(RuleSetValidator)

:param seed: Seed of the marketplace used

:since: v0.1.00
        """

        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.seed = seed
        """
Seed of the marketplace used
        """
    #

    def _check_instance(self, template, kind, patterns, report):
        """
Executes the template on an issue of the given failure kind and records
violations found.

:param template: Rule template
:param kind: Failure kind
:param patterns: Utility patterns
:param report: Validation report

:since: v0.1.00
        """

        model = ArchitectureModel.build(1, self.seed)
        target = self._find_target(model, template, kind)

        if (target is None):
            if (self.log_handler is not None): self.log_handler.warning("{0!r} found no {1} instance for {2}", self, kind, template.id, context = "planning")
            return
        #

        events = model.inject_failure(kind, target, 0.0)
        affected_ids = { event.subject.id for event in events }

        if (kind == FailureKind.CF4): affected_ids.add(target.source.id)

        for component in model.get_eligible_targets(FailureKind.CF2):
            if (component.id not in affected_ids):
                events += model.inject_failure(FailureKind.CF2, component, 0.0)
                break
            #
        #

        annotations = Annotations()
        Analyzer(patterns).analyze(annotations, events, model)

        issue = annotations.get_issue(( kind, target.id ))
        rule_match = (None if (issue is None) else template.create_rule_match(model, issue))

        if (rule_match is None):
            report.add(ValidationReport.LINKED, template.id, "not applicable to a {0} issue".format(kind))
            return
        #

        report.checked.append(( template.id, kind ))
        matches_before = UtilityEngine.find_all_matches(model, patterns)

        try: repair_events = template.execute(model, rule_match, 1.0)
        except Exception as handled_exception:
            report.add(ValidationReport.DETERMINISTIC, template.id, "execution for {0} failed: {1}".format(kind, handled_exception))
            return
        #

        matches_after = UtilityEngine.find_all_matches(model, patterns)

        scope_ids = affected_ids.copy()

        for event in repair_events: scope_ids.update(element.id for element in event.get_elements())

        if (issue.check(model)): report.add(ValidationReport.DETERMINISTIC, template.id, "does not resolve the {0} issue".format(kind))

        for key, match in matches_after.items():
            if (key in matches_before): continue

            if (match.pattern.is_negative()):
                report.add(ValidationReport.NO_NEW_ISSUES, template.id, "creates negative match {0}:{1}".format(*key))
            elif (match.anchor.id not in scope_ids):
                report.add(ValidationReport.SCOPED, template.id, "enables positive match {0}:{1} outside its scope".format(*key))
            #
        #

        for key, match in matches_before.items():
            match_after = matches_after.get(key)

            if (match_after is None):
                if (match.pattern.is_negative() and key != issue.key):
                    report.add(ValidationReport.NO_DESTROYED_ISSUES, template.id, "destroys negative match {0}:{1}".format(*key))
                elif ((not match.pattern.is_negative()) and match.anchor.id not in scope_ids):
                    report.add(ValidationReport.INDEPENDENT, template.id, "disables positive match {0}:{1}".format(*key))
                #
            elif (match.anchor.id not in scope_ids and match_after.cached_utility != match.cached_utility):
                report.add(ValidationReport.INDEPENDENT, template.id, "changes the utility of match {0}:{1}".format(*key))
            #
        #

        observed = (fsum(match.cached_utility for match in matches_after.values())
                    - fsum(match.cached_utility for match in matches_before.values())
                   )

        if (abs(observed - rule_match.utility_increase) > 1e-9 * max(1.0, abs(observed))):
            report.add(ValidationReport.IMPACT,
                       template.id,
                       "predicted increase {0!r} differs from {1!r} observed for {2}".format(rule_match.utility_increase, observed, kind)
                      )
        #
    #

    def _find_target(self, model, template, kind):
        """
Returns the first eligible element of the given failure kind the
template is applicable to.

:param model: Architecture model
:param template: Rule template
:param kind: Failure kind

:return: (object) Component or connector; None if not found
:since:  v0.1.00
        """

        _return = None

        for element in sorted(model.get_eligible_targets(kind), key = lambda element: element.id):
            if (kind == FailureKind.CF4 or template.kind != RuleTemplate.REPLACE):
                _return = element
                break
            #

            alternatives = model.get_alternative_types(element.slot)

            if (template.alternative < len(alternatives) and alternatives[template.alternative] is not element.component_type):
                _return = element
                break
            #
        #

        return _return
    #

    def validate(self, templates = None, patterns = None):
        """
Validates the given rule set.

:param templates: Rule templates; default ones if not defined
:param patterns: Utility patterns; new instances if not defined

:return: (object) ValidationReport
:since:  v0.1.00
        """

        if (templates is None): templates = RuleTemplates.get_default()
        if (patterns is None): patterns = UtilityPatterns.get_all()

        _return = ValidationReport()
        negative_ids = { pattern.id for pattern in UtilityPatterns.get_negative(patterns) }

        for template in templates:
            linked_kinds = [ kind for kind in template.applicable_to if kind in negative_ids ]

            if (len(linked_kinds) < 1):
                _return.add(ValidationReport.LINKED, template.id, "not linked to a negative pattern")
                continue
            #

            if (template.success_likelihood < 1):
                _return.add(ValidationReport.DETERMINISTIC, template.id, "success likelihood {0!r} is below 1".format(template.success_likelihood))
            #

            for kind in linked_kinds: self._check_instance(template, kind, patterns, _return)
        #

        if (self.log_handler is not None): self.log_handler.info("{0!r} validated {1:d} rule templates: {2:d} violations", self, len(templates), len(_return.violations), context = "planning")

        return _return
    #
#
