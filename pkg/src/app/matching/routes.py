from fastapi import APIRouter, Request

from app.graphs.schemas import GraphInput
from app.matching import schemas
from app.matching.manager import PolynomialsManager

router = APIRouter(prefix="/polynomials", tags=["polynomials"])

polynomials_manager = PolynomialsManager()


@router.post("/matching", response_model=schemas.MatchingPolynomial)
async def get_matching_polynomial(request: Request, source: GraphInput) -> schemas.MatchingPolynomial:
    """
    Matching polynomial of a graph6 graph or a family member
    """
    return await polynomials_manager.matching_polynomial(request.state.engine, source)


@router.post("/factor", response_model=schemas.Factorization)
async def factor_polynomial(payload: schemas.PolynomialText) -> schemas.Factorization:
    """
    Irreducible factors with multiplicities and the real-root count
    """
    return await polynomials_manager.factor(payload)


@router.post("/max-multiplicity", response_model=schemas.MaxMultiplicity)
async def get_max_multiplicity(request: Request, source: GraphInput) -> schemas.MaxMultiplicity:
    """
    Largest multiplicity among the nonzero roots of mu(G)
    """
    return await polynomials_manager.max_multiplicity(request.state.engine, source)


@router.post("/path-tree", response_model=schemas.PathTreeResult)
async def check_path_tree(request: Request, payload: schemas.PathTreeRequest) -> schemas.PathTreeResult:
    """
    Divisibility of mu(T(G, u)) by mu(G) and the quotient identity
    """
    return await polynomials_manager.path_tree(request.state.engine, payload)
