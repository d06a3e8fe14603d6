// Wire types mirroring the session service responses. The console never
// computes any of these numbers itself; it only renders them.

export interface Suggestion {
  label: string;
  p: number;
}

export interface Assessment {
  a: number;
  H: number;
  c: number;
  index: number;
  observed: string;
  p: number;
  r: number | null;
  state: string;
  suggestions: Suggestion[];
  unknown_state: boolean;
}

export interface RecommendGuidance {
  variant: 'recommend';
  label: string;
  graph_rank: number;
  model_rank: number;
  rank_sum: number;
}

export interface RepeatGuidance {
  variant: 'repeat';
  suggestions: Suggestion[];
  warning: boolean;
}

export type Guidance = RecommendGuidance | RepeatGuidance;

export interface ObserveResponse {
  index: number;
  label: string;
  duration_s: number;
  recommended: string[];
  assessment: Assessment;
  guidance: Guidance;
  step_twsa: number;
  running_twsa: number;
}

export interface SessionTrace {
  session_id: string;
  current_state: string;
  pending_repeat: boolean;
  running_twsa: number;
  trace: ObserveResponse[];
}

export interface SuccessorRow {
  state: string;
  successors: Array<{ label: string; count: number; p: number }>;
}

export interface ServiceError {
  code: string;
  message: string;
}
