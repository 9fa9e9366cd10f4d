"""
Exact coefficients of the shipped methods.

Rows of A list only the strictly lower part, starting at stage 2. Every
entry is an exact rational string; c is stored where the source prints it
so that loading re-verifies c = A e.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from construct.iterated import parallel_iterated


@dataclass(frozen=True)
class ExpectedMetrics:
    """Reference (s, p, q, A^(p+1), D) values; q None means unbounded."""
    s: int
    p: int
    q: Optional[int]
    principal_error: Optional[float] = None
    D: Optional[float] = None
    D_digits: int = 4


@dataclass(frozen=True)
class MethodRecord:
    name: str
    source: str
    expected: ExpectedMetrics
    A: Sequence[Sequence[str]] = ()
    b: Sequence[str] = ()
    c: Optional[Sequence[str]] = None
    aliases: Tuple[str, ...] = field(default=())
    factory: Optional[Callable] = None


EULER_A: List[List[str]] = []
EULER_B = ["1"]

ERK_322_A = [["1/2"], ["1", "0"]]
ERK_322_B = ["-1/2", "2", "-1/2"]

SHU_OSHER_A = [["1"], ["1/4", "1/4"]]
SHU_OSHER_B = ["1/6", "1/6", "2/3"]

ERK_432_A = [["3/10"], ["2/3", "0"], ["-21/320", "45/44", "-729/3520"]]
ERK_432_B = ["7/108", "500/891", "-27/44", "80/81"]

ERK312_A = [["1/2"], ["1", "0"], ["-1/2", "2", "-1/2"]]
ERK312_B = ["1/6", "2/3", "-1/6", "1/3"]

ERK_533_A = [
    ["3/11"],
    ["285645/493487", "103950/493487"],
    ["3075805/5314896", "1353275/5314896", "0"],
    ["196687/177710", "-129383023/426077496", "48013/42120", "-2268/2405"],
]
ERK_533_B = ["5626/4725", "-25289/13608", "569297/340200", "324/175", "-13/7"]
ERK_533_C = ["0", "3/11", "15/19", "5/6", "1"]

ERK313_A = [["1/3"], ["2/3", "0"], ["1", "0", "0"], ["-11/12", "3/2", "-3/4", "1/6"]]
ERK313_B = ["1/4", "-3", "15/4", "-1", "1"]
ERK313_C = ["0", "1/3", "2/3", "1", "0"]

RK4_A = [["1/2"], ["0", "1/2"], ["0", "0", "1"]]
RK4_B = ["1/6", "1/3", "1/3", "1/6"]

ERK_643_A = [
    ["1"],
    ["461/3920", "99/3920"],
    ["314/605", "126/605", "0"],
    ["13193/197316", "39332/443961", "86632/190269", "-294151/5327532"],
    [
        "884721/773750",
        "52291/696375",
        "-155381744/135793125",
        "-53297233/355151250",
        "74881422/85499375",
    ],
]
ERK_643_B = [
    "113/2880",
    "7/1296",
    "91238/363285",
    "-1478741/1321920",
    "147987/194480",
    "77375/72864",
]
ERK_643_C = ["0", "1", "1/7", "8/11", "5/9", "4/5"]

DOPRI5_A = [
    ["1/5"],
    ["3/40", "9/40"],
    ["44/45", "-56/15", "32/9"],
    ["19372/6561", "-25360/2187", "64448/6561", "-212/729"],
    ["9017/3168", "-355/33", "46732/5247", "49/176", "-5103/18656"],
    ["35/384", "0", "500/1113", "125/192", "-2187/6784", "11/84"],
]
DOPRI5_B = ["35/384", "0", "500/1113", "125/192", "-2187/6784", "11/84", "0"]
DOPRI5_C = ["0", "1/5", "3/10", "4/5", "8/9", "1", "1"]

# Four-point Gauss-Legendre nodes on [0, 1], as exact 16-digit decimals
GAUSS4_NODES = [
    "0.0694318442029737",
    "0.3300094782075719",
    "0.6699905217924281",
    "0.9305681557970263",
]

ERK_744_A = [
    ["13/15"],
    [
        "354503406167294455217584527356969321310499849/679624939387359702842360408541392160411699600",
        "29553225679453489752042741666497760730650643/2038874818162079108527081225624176481235098800",
    ],
    ["599677/612720", "1/185", "1/69"],
    [
        "11942118300581357822967470312387413892866711/90616658584981293712314721138852288054893280",
        "79816622789357424004900970571545142906303/18123331716996258742462944227770457610978656",
        "10939005/8358742409",
        "0",
    ],
    [
        "-2057331211140587771882165942948945576060485224020471/5094460906663329618583273674295283629198217174096496",
        "37580055896186727391837634951840677945750522481251/448734898514386546714588872865387677183262652640624",
        "-235459427251516205060/1472801902839731775141",
        "-787608360/15627214069",
        "24/43",
    ],
    [
        "793706393429237444430333112845341360638504851726921024780703/806700576848993242482064062984309812448909584075544854292960",
        "-33849235109708152171969081938954415033838967121633968102863/23685509164823635789628823956361427999363493832960729746080",
        "1821188984566562706805723220601/956185881514873346828934914081",
        "615685898929080/887641386333269",
        "-88/41",
        "63/79",
    ],
]
ERK_744_B = [
    "-27983058641859756462867613/8486495976646364788361250",
    "266859550993073190375211/43133823812456533406250",
    "-3642903731392259905073408/613543193666469780107625",
    "-59466320887669359732170224/16752980798131655841946875",
    "22530099787083474288594398/3662271198716324657203125",
    "13086932957294488/71277904341826875",
    "12256178974/9710853075",
]
ERK_744_C = ["0", "13/15", "193/360", "719/720", "11/80", "1/36", "193/240"]

ERK_854_A = [
    ["2/31"],
    ["8/39", "0"],
    ["15/38", "0", "0"],
    ["23/38", "0", "0", "0"],
    [
        "-281846119171/64200240000",
        "289705767137/45358567000",
        "-779567154093/524247088000",
        "199824989/614863125",
        "-1/25",
    ],
    [
        "-5647052528401825871/514607937760800000",
        "80442150849469599005477/4661884215626994720000",
        "-271390788610093/44561002480000",
        "16919854802127127/33068912912100000",
        "918241790299/2569461804000",
        "-1/8",
    ],
    [
        "-69373518431251442108053395141546348749/4382652560085449761027489727918400000",
        "28436161533578442493717377903973791583/1122666693846436666675352841982200000",
        "-5846309065854115413909270194602947869/606644216141135157002900448063680000",
        "6129203519106929754603252009272053/11862175903109203056563899370081250",
        "242980026698914693640761833099573847/314274501092549835332737438438856250",
        "-38588365882306831/818781973666952750",
        "-508578133539464/4816364550982075",
    ],
]
ERK_854_B = [
    "-13932812614910970806212030308137/1494246680966212236480728656800",
    "442315248050515865700725458450027/23731641831739396945145366137800",
    "-21619621692735791984774655801338457/1572963107476970769686133552792800",
    "4931046639398139760440943293895907/887688100270302681290608525794300",
    "-808732636620048337464280245511529/1567883987541272156723519232078580",
    "52162695/22722574",
    "-42525800/8688043",
    "190120171223750/63572266692433",
]
ERK_854_C = ["0", "2/31", "8/39", "15/38", "23/38", "31/39", "29/31", "1"]

ERK_955_A = [
    ["1/19"],
    ["1/6", "0"],
    ["5/16", "0", "0"],
    ["1/2", "0", "0", "0"],
    ["11/16", "0", "0", "0", "0"],
    [
        "11448031/2850816",
        "-67411795275/16590798848",
        "51073011/43237376",
        "-23353/64148",
        "583825/8077312",
        "-1/116",
    ],
    [
        "30521441823091/1986340257792",
        "-745932230071621375/35792226257928192",
        "42324456085/5966757888",
        "775674925/6453417096",
        "-38065236125/28020473856",
        "18388001255/24775053336",
        "-25/138",
    ],
    [
        "544015925591990906117739018863/21097279127167116142731264000",
        "-51819957177912933732533469147783191/1292529408768612025127952939417600",
        "15141148893501140337719772533/769541606770966638202880000",
        "-22062343808701233885761491/5740046662014404900523000",
        "-180818957612953115541011736739/146721986657116762265358336000",
        "18393837528018836258241002593/22366927394951953576613895000",
        "-14372715851/701966192290",
        "-3316780581/34682124125",
    ],
]
ERK_955_B = [
    "201919428075343316424206867/7205146638186855485778750",
    "-979811820279525173317561445351/23232888464237446713644747250",
    "-659616477161155066954978/262813990730721440278125",
    "10343523856053877739219144704/232857239079584284108576875",
    "-2224588357354685208355760476/50108519801935858605643125",
    "704220346724742597999572733952/31288349276326419946994221875",
    "-13778944/1751475",
    "92889088/11941875",
    "-714103988224/149255126145",
]
ERK_955_C = ["0", "1/19", "1/6", "5/16", "1/2", "11/16", "5/6", "16/17", "1"]



def _gauss_933():
    return parallel_iterated(3, GAUSS4_NODES)


RECORDS: List[MethodRecord] = [
    MethodRecord(
        name="(3,2,2)",
        source="minimal-stage scheme, c = (0, 1/2, 1)",
        expected=ExpectedMetrics(s=3, p=2, q=2, principal_error=2.357e-1, D=2.0),
        A=ERK_322_A,
        b=ERK_322_B,
    ),
    MethodRecord(
        name="Shu-Osher",
        source="Shu & Osher (1988), third-order SSP",
        expected=ExpectedMetrics(s=3, p=3, q=1, principal_error=7.217e-2, D=1.0),
        A=SHU_OSHER_A,
        b=SHU_OSHER_B,
        aliases=("(3,3,1)", "ssprk3", "shu-osher", "shu–osher"),
    ),
    MethodRecord(
        name="(4,3,2)",
        source="minimal-stage scheme with optimal principal error",
        # reference D is 1.003 while |45/44| = 1.0227; compared at 2 significant digits
        expected=ExpectedMetrics(s=4, p=3, q=2, principal_error=5.893e-2, D=1.003, D_digits=2),
        A=ERK_432_A,
        b=ERK_432_B,
    ),
    MethodRecord(
        name="ERK312",
        source="Skvortsov (2017), eq. 5.2",
        expected=ExpectedMetrics(s=4, p=3, q=2, principal_error=7.217e-2, D=2.0),
        A=ERK312_A,
        b=ERK312_B,
    ),
    MethodRecord(
        name="(5,3,3)",
        source="minimal-stage scheme with minimal coefficient size",
        expected=ExpectedMetrics(s=5, p=3, q=3, principal_error=7.217e-2, D=1.858),
        A=ERK_533_A,
        b=ERK_533_B,
        c=ERK_533_C,
    ),
    MethodRecord(
        name="ERK313",
        source="Skvortsov (2017), eq. 5.2, L-shaped",
        expected=ExpectedMetrics(s=5, p=3, q=3, principal_error=1.443e-1, D=3.75),
        A=ERK313_A,
        b=ERK313_B,
        c=ERK313_C,
    ),
    MethodRecord(
        name="RK4",
        source="Kutta (1901), classical fourth order",
        expected=ExpectedMetrics(s=4, p=4, q=1, principal_error=1.450e-2, D=1.0),
        A=RK4_A,
        b=RK4_B,
        aliases=("(4,4,1)", "rk4", "classical"),
    ),
    MethodRecord(
        name="(6,4,3)",
        source="minimal-stage scheme, optimized",
        expected=ExpectedMetrics(s=6, p=4, q=3, principal_error=1.443e-2, D=1.144),
        A=ERK_643_A,
        b=ERK_643_B,
        c=ERK_643_C,
    ),
    MethodRecord(
        name="(7,4,4)",
        source="minimal-stage scheme, optimized",
        expected=ExpectedMetrics(s=7, p=4, q=4, principal_error=1.667e-2, D=6.187),
        A=ERK_744_A,
        b=ERK_744_B,
        c=ERK_744_C,
    ),
    MethodRecord(
        name="Dormand-Prince",
        source="Dormand & Prince (1980), fifth order",
        expected=ExpectedMetrics(s=7, p=5, q=1, principal_error=3.991e-4, D=11.60),
        A=DOPRI5_A,
        b=DOPRI5_B,
        c=DOPRI5_C,
        aliases=("(7,5,1)", "dopri5", "dormand-prince", "dormand–prince"),
    ),
    MethodRecord(
        name="(8,5,4)",
        source="minimal-stage scheme, Gauss-Lobatto-like abscissae",
        expected=ExpectedMetrics(s=8, p=5, q=4, principal_error=1.217e-2, D=25.33),
        A=ERK_854_A,
        b=ERK_854_B,
        c=ERK_854_C,
    ),
    MethodRecord(
        name="(9,5,5)",
        source="minimal-stage scheme, Gauss-Lobatto-like abscissae",
        expected=ExpectedMetrics(s=9, p=5, q=5, principal_error=3.316e-2, D=44.42),
        A=ERK_955_A,
        b=ERK_955_B,
        c=ERK_955_C,
    ),
    MethodRecord(
        name="(9,3,3)",
        source="parallel-iterated construction on four Gauss nodes",
        expected=ExpectedMetrics(s=9, p=3, q=3),
        factory=_gauss_933,
    ),
    MethodRecord(
        name="Euler",
        source="explicit Euler",
        expected=ExpectedMetrics(s=1, p=1, q=None, principal_error=0.5, D=1.0),
        A=EULER_A,
        b=EULER_B,
        aliases=("euler", "(1,1,inf)"),
    ),
]
