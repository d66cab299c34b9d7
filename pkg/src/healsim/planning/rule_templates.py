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

from math import floor

from dNG.data.settings import Settings
from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.architecture.topology import Topology

from .rule_template import RuleTemplate

class RuleTemplates(object):
    """
The repair rule set shipped with the simulator.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    COST_DEFAULTS = { RuleTemplate.RESTART: 2.0,
                      RuleTemplate.LW_REDEPLOY: 4.0,
                      RuleTemplate.HW_REDEPLOY: 6.0,
                      RuleTemplate.REPLACE: 10.0,
                      RuleTemplate.RECREATE_CONNECTOR: 1.0
                    }
    """
Default execution costs in seconds per repair action kind
    """

    @staticmethod
    def derive_k(window_s, templates = None):
        """
Returns the number of rules that may be executed within the given time
window at the highest rule cost.

:param window_s: Time window in seconds
:param templates: Rule templates; default ones if not defined

:return: (int) Top-k size
:since:  v0.1.00
        """

        if (window_s <= 0): raise ValueException("Time window must be positive")
        if (templates is None): templates = RuleTemplates.get_default()

        return max(1, int(floor(window_s / max(template.cost for template in templates))))
    #

    @staticmethod
    def get(templates, _id):
        """
Returns the template with the given ID.

:param templates: Rule templates
:param _id: Rule template ID

:return: (object) RuleTemplate
:since:  v0.1.00
        """

        for template in templates:
            if (template.id == _id): return template
        #

        raise ValueException("Unknown rule template '{0}'".format(_id))
    #

    @staticmethod
    def get_by_failure_kind(templates):
        """
Returns the given templates grouped by the failure kinds they handle.

:param templates: Rule templates

:return: (dict) Lists of RuleTemplate instances per failure kind
:since:  v0.1.00
        """

        _return = { }

        for template in templates:
            for kind in template.applicable_to: _return.setdefault(kind, [ ]).append(template)
        #

        return _return
    #

    @staticmethod
    def get_cost(kind, costs = None):
        """
Returns the cost of the given repair action kind. Costs given explicitly
take precedence over "healsim_rule_cost_<kind>" settings.

:param kind: Repair action kind
:param costs: Dict of costs per repair action kind

:return: (float) Cost in seconds
:since:  v0.1.00
        """

        if (costs is not None and kind in costs): _return = costs[kind]
        else: _return = Settings.get("healsim_rule_cost_{0}".format(kind.lower()), RuleTemplates.COST_DEFAULTS[kind])

        return float(_return)
    #

    @staticmethod
    def get_default(costs = None, success_likelihood = 1.0):
        """
Returns the default rule templates: restart, light-weight and heavy-weight
redeployment, one replacement per alternative and connector recreation.

:param costs: Dict of costs per repair action kind
:param success_likelihood: Likelihood of a successful execution

:return: (list) RuleTemplate instances
:since:  v0.1.00
        """

        component_kinds = FailureKind.COMPONENT_KINDS

        _return = [ RuleTemplate(RuleTemplate.RESTART,
                                 RuleTemplate.RESTART,
                                 ( FailureKind.CF1, FailureKind.CF2 ),
                                 RuleTemplates.get_cost(RuleTemplate.RESTART, costs),
                                 success_likelihood = success_likelihood
                                ),
                    RuleTemplate(RuleTemplate.LW_REDEPLOY,
                                 RuleTemplate.LW_REDEPLOY,
                                 component_kinds,
                                 RuleTemplates.get_cost(RuleTemplate.LW_REDEPLOY, costs),
                                 success_likelihood = success_likelihood
                                ),
                    RuleTemplate(RuleTemplate.HW_REDEPLOY,
                                 RuleTemplate.HW_REDEPLOY,
                                 component_kinds,
                                 RuleTemplates.get_cost(RuleTemplate.HW_REDEPLOY, costs),
                                 success_likelihood = success_likelihood
                                )
                  ]

        for alternative in range(Topology.ALTERNATIVES_PER_SLOT):
            _return.append(RuleTemplate("{0}({1:d})".format(RuleTemplate.REPLACE, alternative),
                                        RuleTemplate.REPLACE,
                                        component_kinds,
                                        RuleTemplates.get_cost(RuleTemplate.REPLACE, costs),
                                        alternative,
                                        success_likelihood
                                       ))
        #

        _return.append(RuleTemplate(RuleTemplate.RECREATE_CONNECTOR,
                                    RuleTemplate.RECREATE_CONNECTOR,
                                    ( FailureKind.CF4, ),
                                    RuleTemplates.get_cost(RuleTemplate.RECREATE_CONNECTOR, costs),
                                    success_likelihood = success_likelihood
                                   ))

        return _return
    #
#
