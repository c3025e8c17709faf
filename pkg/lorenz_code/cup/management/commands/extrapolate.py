"""
Extrapolate the MECT to another precision from two measured anchors.

Solves T2 - T1 = C * m * ln2 * (p2 - p1) * m / (m + 0.5) for C and predicts
T at --target-p, or with --target-t the precision needed for that MECT.
"""

import csv
import logging

from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.exceptions import FitError
from lorenz_code.cup.analysis import DEFAULT_ORDER
from lorenz_code.cup.analysis import MectEstimate
from lorenz_code.cup.analysis import extrapolate_mect
from lorenz_code.cup.analysis import reference_precision_for
from lorenz_code.cup.analysis import required_precision
from lorenz_code.cup.models import MectMeasurement

logger = logging.getLogger(__name__)


class Command(LorenzCommand):
    help = "Extrapolate the MECT from two (precision, MECT) anchors"

    def add_arguments(self, parser):
        parser.add_argument(
            "--anchor",
            nargs=2,
            action="append",
            metavar=("P", "T"),
            help="A measured anchor: precision in bits and MECT (give twice)",
        )
        parser.add_argument(
            "--from-records",
            nargs=2,
            type=int,
            metavar=("P1", "P2"),
            help="Use the newest recorded measurements at these two precisions",
        )
        parser.add_argument(
            "--target-p",
            type=int,
            default=256,
            help="Precision to predict the MECT for (default: 256)",
        )
        parser.add_argument(
            "--target-t",
            type=float,
            help="Also report the precision needed to reach this MECT",
        )
        parser.add_argument(
            "--order",
            type=int,
            default=DEFAULT_ORDER,
            help=f"Order m of the method (default: {DEFAULT_ORDER})",
        )

    def run(self, **options):
        if options["from_records"]:
            anchors = MectMeasurement.objects.latest_anchors(*options["from_records"])
        elif options["anchor"]:
            anchors = [self.anchor(p, t) for p, t in options["anchor"]]
        else:
            msg = "give two --anchor P T pairs or --from-records P1 P2"
            raise FitError(msg)

        model, predicted = extrapolate_mect(anchors, options["target_p"], options["order"])
        (p1, t1), (p2, t2) = model.anchors
        header = ["p1", "T1", "p2", "T2", "chat", "target_p", "T"]
        row = [p1, t1, p2, t2, model.chat, options["target_p"], predicted]
        if options["target_t"] is not None:
            header += ["target_T", "required_p"]
            row += [options["target_t"], required_precision(model, options["target_t"])]

        writer = csv.writer(self.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerow(row)

    @staticmethod
    def anchor(p, t):
        try:
            p, t = int(p), float(t)
        except ValueError as exc:
            msg = f"invalid anchor {p} {t}: expected an integer precision and a time"
            raise FitError(msg) from exc
        return MectEstimate(
            precision_bits=p,
            mect=t,
            delta=0.0,
            h_used=0.0,
            reference_precision=reference_precision_for(p),
        )
