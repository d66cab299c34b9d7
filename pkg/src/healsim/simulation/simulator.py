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

from heapq import heappop, heappush
from time import perf_counter

from numpy.random import default_rng

from dNG.data.settings import Settings
from dNG.module.named_loader import NamedLoader
from dNG.plugins.hook import Hook

from healsim.analysis.analyzer import Analyzer
from healsim.analysis.annotations import Annotations
from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.utility.utility_engine import UtilityEngine
from healsim.planning.calibrated_planning_time import CalibratedPlanningTime
from healsim.planning.planners import Planners
from healsim.planning.rule_templates import RuleTemplates
from healsim.runtime.stale_match_exception import StaleMatchException

from .failure_injector import FailureInjector
from .mape_run_record import MapeRunRecord
from .simulation_timeline import SimulationTimeline

class Simulator(object):
    """
Discrete-event simulation of a self-healing system over virtual time.

Failures are injected at their trace times and lower the utility at once.
A MAPE run starts whenever changes are queued and no other run is active.
Its rules are executed one after another, each occupying the virtual time
of its cost. Changes arriving during a run are handled by the next one.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: simulation
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    EVENT_FAILURE = "failure"
    """
Failure arrival
    """
    EVENT_LOOP_FINISHED = "loop_finished"
    """
End of a MAPE run
    """
    EVENT_LOOP_START = "loop_start"
    """
Start of a MAPE run
    """
    EVENT_RULE_COMPLETED = "rule_completed"
    """
Completion of a rule execution
    """

    PRIORITIES = { EVENT_RULE_COMPLETED: 0, EVENT_LOOP_FINISHED: 0, EVENT_FAILURE: 1, EVENT_LOOP_START: 2 }
    """
Order of events scheduled for the same virtual time
    """

    def __init__(self, config, model = None, templates = None):
        """
Constructor __init__(Simulator)

:param config: Simulation config
:param model: Architecture model; built from the config if not defined
:param templates: Rule templates; default ones for the config if not
                  defined

:since: v0.1.00
        """

        self.analyzer = Analyzer()
        """
Analyzer
        """
        self.annotations = None
        """
Annotations shared by all MAPE runs
        """
        self.config = config
        """
Simulation config
        """
        self.engine = None
        """
Incremental utility engine
        """
        self.injector = None
        """
Failure injector
        """
        self.is_loop_active = False
        """
True while a MAPE run is active
        """
        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.model = (ArchitectureModel.build(config.shops, config.seed) if (model is None) else model)
        """
Architecture model the failures are injected into
        """
        self.pending_changes = [ ]
        """
Change events queued for the next MAPE run
        """
        self.pending_failures = 0
        """
Number of failures queued for the next MAPE run
        """
        self.planner = None
        """
Planner instance
        """
        self._queue = [ ]
        """
Event queue
        """
        self._random = default_rng(config.seed)
        """
Generator used for rule outcomes
        """
        self._sequence = 0
        """
Sequence number keeping the queue stable
        """
        self.templates = (RuleTemplates.get_default(config.rule_costs, config.rule_success_likelihood)
                          if (templates is None) else
                          templates
                         )
        """
Rule templates
        """
        self.time = 0.0
        """
Current virtual time
        """
        self.timeline = None
        """
Timeline of the current simulation
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<Simulator planner={0} t={1!r}>".format(self.config.planner_id, self.time)
    #

    def _add_breakpoint(self):
        """
Records the current utility on the timeline.

:since: v0.1.00
        """

        utility = self.engine.get_utility()

        self.timeline.add_breakpoint(self.time, utility)
        Hook.call("healsim.Simulator.onUtilityChanged", simulator = self, time = self.time, utility = utility)
    #

    def _get_planning_durations(self, analyze_wall_time, plan):
        """
Returns the virtual analysis and planning durations of a MAPE run.

:param analyze_wall_time: Measured analysis time in seconds
:param plan: Plan

:return: (tuple) Analysis and planning duration in seconds
:since:  v0.1.00
        """

        if (self.config.is_calibrated()):
            plan_duration = CalibratedPlanningTime.estimate(self.config.planner_id,
                                                            len(self.model.components),
                                                            len(self.annotations)
                                                           )

            _return = ( 0.0, plan_duration * self.config.planning_time_scale )
        else: _return = ( analyze_wall_time, plan.planning_time )

        return _return
    #

    def _handle_failure(self, entry):
        """
Injects the failure of a trace entry.

:param entry: Failure trace entry

:since: v0.1.00
        """

        events = self.injector.inject(entry, self.time)

        if (len(events) > 0):
            self.engine.process_events(events)
            self.pending_changes.extend(events)
            self.pending_failures += 1

            self._add_breakpoint()

            if (not self.is_loop_active): self._schedule(self.time, Simulator.EVENT_LOOP_START)
        #
    #

    def _handle_loop_finished(self, record):
        """
Finishes a MAPE run and triggers the next one if required.

:param record: MAPE run record

:since: v0.1.00
        """

        self.is_loop_active = False
        self.timeline.records.append(record)

        if (self.log_handler is not None):
            self.log_handler.debug("{0!r} finished {1!r}", self, record, context = "simulation")
        #

        Hook.call("healsim.Simulator.onMapeRunFinished", simulator = self, record = record)

        if (self.pending_failures > 0
            or (len(self.annotations) > 0 and record.get_rules_executed() > 0)
           ): self._schedule(self.time, Simulator.EVENT_LOOP_START)
    #

    def _handle_loop_start(self):
        """
Runs the analysis and planning steps of a MAPE run and schedules the
execution of its rules.

:since: v0.1.00
        """

        if (self.is_loop_active): return

        self.is_loop_active = True

        changes = self.pending_changes
        self.pending_changes = [ ]
        self.pending_failures = 0

        record = MapeRunRecord(len(self.timeline.records), self.time, len(changes), len(self.annotations))

        if (self.log_handler is not None):
            self.log_handler.debug("{0!r} starts MAPE run #{1:d} with {2:d} changes", self, record.run, len(changes), context = "simulation")
        #

        start_time = perf_counter()
        self.analyzer.analyze(self.annotations, changes, self.model)
        analyze_wall_time = perf_counter() - start_time

        record.issues_found = len(self.annotations)

        plan = self.planner.plan(self.annotations, self.model)
        record.analyze_duration, record.plan_duration = self._get_planning_durations(analyze_wall_time, plan)

        is_failure_consuming_cost = Settings.get("healsim_rule_failure_consumes_cost", True)
        completion_time = self.time + record.analyze_duration + record.plan_duration

        for rule_match in plan:
            is_successful = (self._random.random() < rule_match.template.success_likelihood)
            if (is_successful or is_failure_consuming_cost): completion_time += rule_match.cost

            self._schedule(completion_time, Simulator.EVENT_RULE_COMPLETED, ( record, rule_match, is_successful ))
        #

        record.execute_duration = completion_time - (self.time + record.analyze_duration + record.plan_duration)
        self._schedule(completion_time, Simulator.EVENT_LOOP_FINISHED, record)
    #

    def _handle_rule_completed(self, record, rule_match, is_successful):
        """
Applies a completed rule execution to the model.

:param record: MAPE run record
:param rule_match: Rule match executed
:param is_successful: True if the repair takes effect

:since: v0.1.00
        """

        issue = rule_match.issue

        if (is_successful):
            try:
                events = self.model.apply_repair(rule_match, self.time, self.annotations)

                self.engine.process_events(events)
                self.pending_changes.extend(events)

                self._add_breakpoint()
            except StaleMatchException:
                is_successful = False

                if (self.log_handler is not None):
                    self.log_handler.debug("{0!r} dropped stale {1!r}", self, rule_match, context = "simulation")
                #
            #
        #

        record.add_execution(rule_match.template.id, issue.kind, self.time, is_successful)
    #

    def _initialize(self):
        """
Resets the simulation state for a new run.

:since: v0.1.00
        """

        self.annotations = Annotations(self.config.get_k(self.templates))
        self.engine = UtilityEngine(self.model)
        self.injector = FailureInjector(self.model)
        self.is_loop_active = False
        self.pending_changes = [ ]
        self.pending_failures = 0
        self.planner = Planners.create(self.config.planner_id,
                                       self.templates,
                                       self.model,
                                       self.config.is_calibrated(),
                                       self.config.oracle_exhaustive_limit
                                      )
        self._queue = [ ]
        self._random = default_rng(self.config.seed)
        self._sequence = 0
        self.time = 0.0

        self.timeline = SimulationTimeline(self.engine.initialize())
    #

    def run(self, trace):
        """
Simulates the given failure trace until every event is processed.

:param trace: Failure trace

:return: (object) SimulationTimeline
:since:  v0.1.00
        """

        self._initialize()

        for entry in trace: self._schedule(entry.time, Simulator.EVENT_FAILURE, entry)

        while (len(self._queue) > 0):
            self.time, _, _, kind, payload = heappop(self._queue)

            if (kind == Simulator.EVENT_FAILURE): self._handle_failure(payload)
            elif (kind == Simulator.EVENT_LOOP_START): self._handle_loop_start()
            elif (kind == Simulator.EVENT_RULE_COMPLETED): self._handle_rule_completed(*payload)
            else: self._handle_loop_finished(payload)
        #

        self.timeline.end_time = max(self.timeline.end_time, self.time, trace.duration)

        if (self.log_handler is not None):
            self.log_handler.debug("{0!r} finished {1!r} with {2:d} MAPE runs and final utility {3!r}",
                                   self,
                                   trace,
                                   len(self.timeline.records),
                                   self.timeline.get_final_utility(),
                                   context = "simulation"
                                  )
        #

        return self.timeline
    #

    def _schedule(self, time, kind, payload = None):
        """
Adds an event to the queue.

:param time: Virtual time
:param kind: Event kind
:param payload: Event data

:since: v0.1.00
        """

        heappush(self._queue, ( time, Simulator.PRIORITIES[kind], self._sequence, kind, payload ))
        self._sequence += 1
    #

    @staticmethod
    def run_simulation(config, trace, model = None):
        """
Simulates the given failure trace with a new simulator.

:param config: Simulation config
:param trace: Failure trace
:param model: Architecture model; built from the config if not defined

:return: (object) SimulationTimeline
:since:  v0.1.00
        """

        return Simulator(config, model).run(trace)
    #
#
