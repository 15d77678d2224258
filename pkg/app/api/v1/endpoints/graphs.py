from fastapi import APIRouter

from app.schemas.graph import GenerateRequest, GraphDocument
from app.services.generator import generate_random_graph
from app.services.graph_io import graph_from_document, graph_to_document

router = APIRouter()

@router.post("/generate", response_model=GraphDocument)
async def generate_graph(request: GenerateRequest) -> GraphDocument:
    '''Generate a random connected instance'''
    g = generate_random_graph(request.n, request.density, request.seed)
    return graph_to_document(g)

@router.post("/validate")
async def validate_graph(document: GraphDocument):
    '''Check a graph document; invalid graphs are rejected with 400'''
    g = graph_from_document(document)
    return {
        "n": g.n,
        "edge_count": g.edge_count,
        "valid": True
    }
