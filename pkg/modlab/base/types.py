from .helpers import make_enum, join_to_enum

###########
# Modules #
###########

# injectivity hierarchy, strongest first
INJECTIVE = 'injective'
QUASI_INJECTIVE = 'quasi_injective'
PSEUDO_INJECTIVE = 'pseudo_injective'
AUTOMORPHISM_INVARIANT = 'automorphism_invariant'
HierarchyFlag = make_enum('HierarchyFlag', INJECTIVE, QUASI_INJECTIVE, PSEUDO_INJECTIVE,
                          AUTOMORPHISM_INVARIANT)

# summand conditions and their combinations
C1 = 'C1'
C2 = 'C2'
C3 = 'C3'
CS = 'CS'
CONTINUOUS = 'continuous'
QUASI_CONTINUOUS = 'quasi_continuous'
SummandFlag = make_enum('SummandFlag', C1, C2, C3, CS, CONTINUOUS, QUASI_CONTINUOUS)

QUASI_PROJECTIVE = 'quasi_projective'
UNIFORM = 'uniform'
UNISERIAL = 'uniserial'
LOCAL = 'local'
INDECOMPOSABLE = 'indecomposable'
SQUARE_FREE_SOCLE = 'square_free_socle'
StructureFlag = make_enum('StructureFlag', QUASI_PROJECTIVE, UNIFORM, UNISERIAL, LOCAL, INDECOMPOSABLE,
                          SQUARE_FREE_SOCLE)

ProfileFlag = join_to_enum('ProfileFlag', HierarchyFlag, SummandFlag, StructureFlag)

# chain in which every flag implies the next one
HIERARCHY_CHAIN = [INJECTIVE, QUASI_INJECTIVE, PSEUDO_INJECTIVE, AUTOMORPHISM_INVARIANT]

DIM = 'dim'
COMPOSITION_LENGTH = 'composition_length'
GOLDIE_DIMENSION = 'goldie_dimension'
END_HULL_SIZE = 'end_hull_size'
AUT_HULL_SIZE = 'aut_hull_size'

############
# Verdicts #
############

HOLDS = 'holds'
FAILS = 'fails'
VACUOUS = 'vacuous'
BOUNDARY = 'expected_boundary'
INAPPLICABLE = 'inapplicable'
DATA_ONLY = 'data_only'
VerdictStatus = make_enum('VerdictStatus', HOLDS, FAILS, VACUOUS, BOUNDARY, INAPPLICABLE, DATA_ONLY)

# statuses that do not make a suite run fail
PASSING_STATUSES = [HOLDS, VACUOUS, BOUNDARY, INAPPLICABLE, DATA_ONLY]

#######
# CLI #
#######

RING = 'ring'
MODULE = 'module'
CHECK = 'check'
REPORT = 'report'
CENSUS = 'census'
PAPER = 'paper'
PAPER_ALIAS = 'suite'

# Report.command values
RING_CHECK = RING + ' ' + CHECK
MODULE_REPORT = MODULE + ' ' + REPORT

TEXT = 'text'
STRUCTURED = 'structured'
OutputFormat = make_enum('OutputFormat', TEXT, STRUCTURED)

EXAMPLE1 = 'example1'
EXAMPLE2 = 'example2'
ALL = 'all'
SuiteSelection = make_enum('SuiteSelection', EXAMPLE1, EXAMPLE2, ALL)

EXIT_OK = 0
EXIT_VERDICT_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3
