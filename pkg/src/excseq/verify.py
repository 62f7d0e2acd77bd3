"""Named verification sweeps, shared by the CLI and the test suite."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import counting
from .bijection import (check_transport, m_exc_sequences, sequence_to_tuple,
                        tuple_to_sequence)
from .configs import (all_valid_orders, duality_frame, exchange_graph,
                      exchange_matrix, garside_configuration, g_vector_check,
                      horizontal_subcat, mutate_configuration, order_cluster,
                      recover_cluster, slope_vectors)
from .dynkin import build_diagram
from .errors import VerificationError
from .repengine import category
from .shiftcat import enumerate_clusters, ordered_tuples, shifted_objects
from .wide import complete_exc_sequences, rel_proj_poly_enumerated


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(label, bool(ok), detail))

    def run(self, label: str, fn) -> None:
        """Record a check that passes unless it raises VerificationError."""
        try:
            fn()
            self.add(label, True)
        except VerificationError as exc:
            self.add(label, False, str(exc))

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "PASS" if c.ok else "FAIL"
            suffix = f"  [{c.detail}]" if c.detail and not c.ok else ""
            out.append(f"{mark}  {c.label}{suffix}")
        out.append(f"{'PASS' if self.ok else 'FAIL'}  {self.title}")
        return out


def verify_counting(tag: str) -> Report:
    report = Report(f"counting suite for {tag}")
    diagram = build_diagram(tag)
    e_rec = counting.count_complete_exc_sequences(diagram)
    e_closed = counting.count_closed_form(diagram)
    report.add("recursion equals closed form", e_rec == e_closed,
               f"{e_rec} vs {e_closed}")
    f = counting.rel_proj_poly(diagram)
    report.add("refinement polynomial sums to the count", f(1) == e_rec)
    g = counting.m_sequence_poly(diagram)
    report.add("shifted count at 0 is n!", g(0) == math.factorial(diagram.rank))
    report.add("shifted count vanishes at -1", g(-1) == 0)
    report.add("shifted count equals n! times the cluster product",
               counting.m_count_identity_holds(diagram))
    report.add("real roots confined to [-1, 0)", counting.real_root_check(g))
    if diagram.is_simply_laced and diagram.rank <= 5:
        cat = category(tag)
        seqs = complete_exc_sequences(cat)
        report.add("enumerated sequence count matches", len(seqs) == e_rec,
                   f"{len(seqs)} vs {e_rec}")
        report.add("enumerated refinement polynomial matches",
                   rel_proj_poly_enumerated(cat).coeffs == f.coeffs)
    return report


def verify_bijection(tag: str, m: int) -> Report:
    report = Report(f"bijection suite for {tag}, m={m}")
    cat = category(tag)
    diagram = cat.quiver.diagram
    for k in range(1, cat.n + 1):
        tuples = ordered_tuples(cat, m, k)
        seqs = m_exc_sequences(cat, m, k)
        images = [tuple_to_sequence(cat, m, t) for t in tuples]
        report.add(f"k={k}: counts agree", len(tuples) == len(seqs),
                   f"{len(tuples)} tuples vs {len(seqs)} sequences")
        report.add(f"k={k}: injective", len(set(images)) == len(images))
        report.add(f"k={k}: image is the sequence set", set(images) == set(seqs))
        report.add(f"k={k}: inverse round trips",
                   all(sequence_to_tuple(cat, m, img) == t
                       for t, img in zip(tuples, images)))
        if k >= 2:
            deletion_ok = all(tuple_to_sequence(cat, m, t[1:]) == img[1:]
                              for t, img in zip(tuples, images))
            report.add(f"k={k}: compatible with deleting the first entry", deletion_ok)
    g = counting.m_sequence_poly(diagram)
    complete = ordered_tuples(cat, m, cat.n)
    report.add("complete tuple count matches the polynomial",
               len(complete) == g(m), f"{len(complete)} vs {g(m)}")
    transport_ok = True
    worst = ""
    for t_obj in shifted_objects(cat, None, m):
        r = check_transport(cat, m, t_obj)
        if not r.ok:
            transport_ok = False
            worst = f"{t_obj}: {r.violations[0]}"
    report.add("every transport map is a compatibility-preserving bijection",
               transport_ok, worst)
    return report


def verify_duality(tag: str, m: int) -> Report:
    report = Report(f"duality suite for {tag}, m={m}")
    cat = category(tag)
    clusters = enumerate_clusters(cat, m)
    expected = counting.fomin_reading_count(cat.quiver.diagram, m)
    report.add("cluster count matches the product formula",
               len(clusters) == expected, f"{len(clusters)} vs {expected}")
    for cluster in clusters:
        ordered = order_cluster(cat, m, cluster)
        label = " ".join(str(o) for o in ordered)
        try:
            comps = garside_configuration(cat, m, ordered)
            frame = duality_frame(cat, m, ordered, comps)
            if not g_vector_check(cat, frame):
                raise VerificationError("restated frame identity failed")
            hs = [horizontal_subcat(cat, m, comps, s) for s in range(0, m)]
            for a in hs:
                for b in hs:
                    if abs(a.slope - b.slope) >= 2 and set(a.objects) & set(b.objects):
                        raise VerificationError(
                            f"slope windows {a.slope} and {b.slope} overlap")
            b_mat = exchange_matrix(cat, m, comps)
            if any(b_mat[i][j] != -b_mat[j][i] for i in range(cat.n) for j in range(cat.n)):
                raise VerificationError("exchange matrix is not antisymmetric")
            report.add(f"cluster {label}", True)
        except VerificationError as exc:
            report.add(f"cluster {label}", False, str(exc))
    # configuration does not depend on the chosen valid order (small sweeps)
    if len(clusters) <= 20:
        stable = True
        for cluster in clusters:
            configs = {frozenset(garside_configuration(cat, m, o))
                       for o in all_valid_orders(cat, m, cluster)}
            if len(configs) != 1:
                stable = False
        report.add("configuration independent of the chosen order", stable)
    return report


def verify_mutation(tag: str, m: int) -> Report:
    report = Report(f"mutation suite for {tag}, m={m}")
    cat = category(tag)
    clusters = enumerate_clusters(cat, m)
    for cluster in clusters:
        ordered = order_cluster(cat, m, cluster)
        comps = garside_configuration(cat, m, ordered)
        svs = slope_vectors(m, comps)
        label = " ".join(str(o) for o in ordered)
        try:
            for k in range(cat.n):
                for direction in ("+", "-"):
                    if direction == "+" and svs[k].slope + 1 > m:
                        continue
                    if direction == "-" and svs[k].slope - 1 < 0:
                        continue
                    new_comps = mutate_configuration(cat, m, comps, k, direction)
                    new_ordered = recover_cluster(cat, m, ordered, new_comps, k)
                    back = mutate_configuration(cat, m, new_comps, k,
                                                "-" if direction == "+" else "+")
                    if back != comps:
                        raise VerificationError(f"round trip failed at k={k}, {direction}")
                    rederived = garside_configuration(
                        cat, m, order_cluster(cat, m, new_ordered))
                    if set(rederived) != set(new_comps):
                        raise VerificationError(
                            f"rederived configuration differs at k={k}, {direction}")
            report.add(f"cluster {label}", True)
        except VerificationError as exc:
            report.add(f"cluster {label}", False, str(exc))
    def graph_closes():
        nodes, edges = exchange_graph(cat, m)
        if len(nodes) != len(clusters) or any(not 0 <= e[1] < len(nodes) for e in edges):
            raise VerificationError("exchange graph does not close on the cluster set")

    report.run("exchange graph closes on the cluster set", graph_closes)
    return report


def verify_all(tag: str, m: int) -> Report:
    report = Report(f"all suites for {tag}, m={m}")
    for sub in (verify_counting(tag), verify_bijection(tag, m),
                verify_duality(tag, m), verify_mutation(tag, m)):
        report.checks.extend(sub.checks)
    return report


SUITES = {
    "counting": lambda tag, m: verify_counting(tag),
    "bijection": verify_bijection,
    "duality": verify_duality,
    "mutation": verify_mutation,
    "all": verify_all,
}
