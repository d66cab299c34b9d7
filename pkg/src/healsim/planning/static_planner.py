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

from dNG.data.settings import Settings

from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.architecture.topology import Topology
from healsim.data.utility.utility_patterns import UtilityPatterns

from .abstract_planner import AbstractPlanner
from .rule_template import RuleTemplate
from .rule_templates import RuleTemplates

class StaticPlanner(AbstractPlanner):
    """
Static planner: every failure kind is handled by a fixed rule and issues
are ordered by a fixed failure kind precedence. Utility increases are
design-time estimates and the runtime model is never evaluated.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    DEFAULT_RULES = { FailureKind.CF1: RuleTemplate.LW_REDEPLOY,
                      FailureKind.CF2: RuleTemplate.RESTART,
                      FailureKind.CF3: RuleTemplate.HW_REDEPLOY,
                      FailureKind.CF4: RuleTemplate.RECREATE_CONNECTOR
                    }
    """
Default rule template per failure kind
    """
    KIND_ORDER = ( FailureKind.CF3, FailureKind.CF1, FailureKind.CF2, FailureKind.CF4 )
    """
Failure kind precedence
    """

    id = "static"
    """
Planner ID
    """

    def __init__(self, templates = None, model = None, rules = None):
        """
Constructor __init__(StaticPlanner)

:param templates: Rule templates; default ones if not defined
:param model: Design-time architecture model used for utility estimates
:param rules: Dict of rule template IDs per failure kind; settings
              "healsim_static_rule_cf<n>" if not defined

:since: v0.1.00
        """

        AbstractPlanner.__init__(self, templates)

        if (rules is None):
            rules = { kind: Settings.get("healsim_static_rule_{0}".format(kind.lower()), StaticPlanner.DEFAULT_RULES[kind])
                      for kind in FailureKind.ALL
                    }
        #

        self.estimates = StaticPlanner.get_design_estimates(model)
        """
Design-time utility increase estimates per failure kind
        """
        self.rules = { kind: RuleTemplates.get(self.templates, _id) for kind, _id in rules.items() }
        """
Rule template per failure kind
        """
    #

    def _get_template(self, model, issue):
        """
Returns the template configured for the kind of the given issue or the
first applicable one if the configured template does not apply.

:param model: Architecture model
:param issue: Issue to handle

:return: (object) RuleTemplate; None if no template is applicable
:since:  v0.1.00
        """

        _return = self.rules.get(issue.kind)

        if (_return is None or (not _return.is_applicable(model, issue))):
            _return = None

            for template in self.templates:
                if (template.is_applicable(model, issue)):
                    _return = template
                    break
                #
            #
        #

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

        issues = sorted(annotations.get_issues(),
                        key = lambda issue: ( StaticPlanner.KIND_ORDER.index(issue.kind), int(issue.id[1:]) )
                       )

        _return = [ ]

        for issue in issues:
            if (len(_return) >= annotations.k): break

            issue.handled_by = None
            template = self._get_template(model, issue)

            if (template is not None):
                issue.handled_by = self._create_rule_match(template, model, issue, self.estimates.get(issue.kind, 0.0))
                _return.append(issue.handled_by)
            #
        #

        annotations.set_best_rules(_return)
        return _return
    #

    @staticmethod
    def get_design_estimates(model = None):
        """
Returns the average utility lost per failure kind for the given design-time
model. Without a model the estimates are derived from the mean
criticality, reliability and connectivity ranges.

:param model: Design-time architecture model

:return: (dict) Utility increase estimate per failure kind
:since:  v0.1.00
        """

        if (model is None or len(model.components) < 1):
            connector_estimate = (sum(Topology.CRITICALITY_RANGE) / 2.0) * (sum(Topology.RELIABILITY_RANGE) / 2.0)
            component_estimate = connector_estimate * 2 * Topology.get_connector_count() / Topology.get_slot_count()
        else:
            components = model.get_components()

            component_estimate = fsum(UtilityPatterns.get_component_utility(component) for component in components) / len(components)
            connector_estimate = fsum(component.criticality * component.get_reliability() for component in components) / len(components)
        #

        _return = { kind: component_estimate for kind in FailureKind.COMPONENT_KINDS }
        _return[FailureKind.CF4] = connector_estimate

        return _return
    #
#
